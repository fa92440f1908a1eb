// Copyright 2026 The tsmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsmap/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tsmap {

Gate Gate::cnot(int control, int target, std::size_t id) {
  return Gate{GateKind::CNOT, "cx", "", control, target, id};
}

Gate Gate::swap(int a, int b, std::size_t id) {
  return Gate{GateKind::SWAP, "swap", "", a, b, id};
}

Gate Gate::h(int q, std::size_t id) {
  return Gate{GateKind::H, "h", "", q, -1, id};
}

Gate Gate::one_qubit(std::string name, int q, std::string params, std::size_t id) {
  GateKind kind = name == "h" ? GateKind::H : GateKind::OneQubit;
  return Gate{kind, std::move(name), std::move(params), q, -1, id};
}

bool Gate::same_op(const Gate& other) const {
  return kind == other.kind && name == other.name && params == other.params &&
         q0 == other.q0 && q1 == other.q1;
}

std::size_t QasmProgram::count_two_qubit() const {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

QasmError::QasmError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(
          "line " + std::to_string(line) + ", column " + std::to_string(column) +
          ": " + what),
      line_(line),
      column_(column) {}

bool operator==(const Gate& a, const Gate& b) {
  return a.same_op(b) && a.id == b.id;
}

bool operator==(const Measurement& a, const Measurement& b) {
  return a.qubit == b.qubit && a.target == b.target;
}

bool operator==(const QasmProgram& a, const QasmProgram& b) {
  return a.version == b.version && a.includes == b.includes &&
         a.qreg_name == b.qreg_name && a.num_qubits == b.num_qubits &&
         a.cregs == b.cregs && a.gates == b.gates &&
         a.measurements == b.measurements;
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  QasmProgram run() {
    std::size_t pos = 0;
    while (true) {
      pos = skip_blank(pos);
      if (pos >= text_.size()) break;
      std::size_t end = find_statement_end(pos);
      statement(pos, end);
      pos = end + 1;
    }
    return std::move(prog_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    std::size_t col = offset - line_starts_[line - 1] + 1;
    throw QasmError(what, line, col);
  }

  // Skips whitespace and // comments.
  std::size_t skip_blank(std::size_t pos) const {
    while (pos < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos]))) {
        ++pos;
      } else if (text_.substr(pos, 2) == "//") {
        while (pos < text_.size() && text_[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    return pos;
  }

  std::size_t find_statement_end(std::size_t pos) const {
    for (std::size_t i = pos; i < text_.size(); ++i) {
      if (text_[i] == ';') return i;
      if (text_[i] == '{') fail("gate bodies are not supported", i);
      if (text_.substr(i, 2) == "//") {
        while (i < text_.size() && text_[i] != '\n') ++i;
      }
    }
    fail("missing ';' at end of statement", pos);
  }

  struct Cursor {
    std::size_t pos;
    std::size_t end;
  };

  void skip_ws(Cursor& c) const {
    while (c.pos < c.end) {
      if (std::isspace(static_cast<unsigned char>(text_[c.pos]))) {
        ++c.pos;
      } else if (text_.substr(c.pos, 2) == "//") {
        while (c.pos < c.end && text_[c.pos] != '\n') ++c.pos;
      } else {
        break;
      }
    }
  }

  std::optional<std::string> ident(Cursor& c) const {
    skip_ws(c);
    if (c.pos >= c.end || !is_ident_start(text_[c.pos])) return std::nullopt;
    std::size_t start = c.pos;
    while (c.pos < c.end && is_ident_char(text_[c.pos])) ++c.pos;
    return std::string(text_.substr(start, c.pos - start));
  }

  std::string expect_ident(Cursor& c, const char* what) const {
    auto id = ident(c);
    if (!id) fail(std::string("expected ") + what, c.pos);
    return *id;
  }

  void expect(Cursor& c, char ch) const {
    skip_ws(c);
    if (c.pos >= c.end || text_[c.pos] != ch) {
      fail(std::string("expected '") + ch + "'", c.pos);
    }
    ++c.pos;
  }

  bool accept(Cursor& c, char ch) const {
    skip_ws(c);
    if (c.pos < c.end && text_[c.pos] == ch) {
      ++c.pos;
      return true;
    }
    return false;
  }

  int integer(Cursor& c) const {
    skip_ws(c);
    std::size_t start = c.pos;
    while (c.pos < c.end && std::isdigit(static_cast<unsigned char>(text_[c.pos]))) {
      ++c.pos;
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + c.pos, value);
    if (start == c.pos || ec != std::errc{}) fail("expected integer", start);
    (void)ptr;
    return value;
  }

  void expect_end(Cursor& c) const {
    skip_ws(c);
    if (c.pos != c.end) fail("unexpected trailing text", c.pos);
  }

  // Parses `name[idx]` or a bare register name (-1 means whole register).
  std::pair<std::string, int> operand(Cursor& c) const {
    skip_ws(c);
    std::size_t at = c.pos;
    std::string name = expect_ident(c, "register name");
    int index = -1;
    if (accept(c, '[')) {
      index = integer(c);
      expect(c, ']');
    }
    if (name != prog_.qreg_name || prog_.num_qubits == 0) {
      fail("unknown quantum register '" + name + "'", at);
    }
    if (index >= prog_.num_qubits) {
      fail("qubit index " + std::to_string(index) + " out of range", at);
    }
    return {name, index};
  }

  void statement(std::size_t begin, std::size_t end) {
    Cursor c{begin, end};
    std::string kw = expect_ident(c, "statement");
    if (kw == "OPENQASM") {
      skip_ws(c);
      std::size_t s = c.pos;
      while (c.pos < c.end && !std::isspace(static_cast<unsigned char>(text_[c.pos]))) {
        ++c.pos;
      }
      prog_.version = std::string(text_.substr(s, c.pos - s));
      if (prog_.version.rfind("2", 0) != 0) {
        fail("only OpenQASM 2 is supported", s);
      }
      expect_end(c);
    } else if (kw == "include") {
      skip_ws(c);
      std::size_t s = c.pos;
      if (c.pos >= c.end || text_[c.pos] != '"') fail("expected quoted file name", s);
      std::size_t close = text_.find('"', c.pos + 1);
      if (close == std::string_view::npos || close >= c.end) {
        fail("unterminated string", s);
      }
      prog_.includes.emplace_back(text_.substr(c.pos + 1, close - c.pos - 1));
      c.pos = close + 1;
      expect_end(c);
    } else if (kw == "qreg") {
      if (prog_.num_qubits > 0) {
        fail("multiple quantum registers are not supported", begin);
      }
      prog_.qreg_name = expect_ident(c, "register name");
      expect(c, '[');
      std::size_t at = c.pos;
      prog_.num_qubits = integer(c);
      if (prog_.num_qubits <= 0) fail("register size must be positive", at);
      expect(c, ']');
      expect_end(c);
    } else if (kw == "creg") {
      std::string name = expect_ident(c, "register name");
      expect(c, '[');
      int size = integer(c);
      expect(c, ']');
      expect_end(c);
      prog_.cregs.push_back(name + "[" + std::to_string(size) + "]");
    } else if (kw == "barrier") {
      // Barriers carry no semantics for routing.
    } else if (kw == "measure") {
      measure(c);
    } else if (kw == "gate" || kw == "opaque" || kw == "if" || kw == "reset") {
      fail("unsupported statement '" + kw + "'", begin);
    } else {
      gate(kw, begin, c);
    }
  }

  void measure(Cursor& c) {
    auto [qname, qidx] = operand(c);
    skip_ws(c);
    if (text_.substr(c.pos, 2) != "->") fail("expected '->'", c.pos);
    c.pos += 2;
    std::string cname = expect_ident(c, "classical register");
    int cidx = -1;
    if (accept(c, '[')) {
      cidx = integer(c);
      expect(c, ']');
    }
    expect_end(c);
    if ((qidx < 0) != (cidx < 0)) {
      fail("measure operands must both be indexed or both be registers", c.pos);
    }
    if (qidx >= 0) {
      prog_.measurements.push_back({qidx, cname + "[" + std::to_string(cidx) + "]"});
    } else {
      for (int i = 0; i < prog_.num_qubits; ++i) {
        prog_.measurements.push_back({i, cname + "[" + std::to_string(i) + "]"});
      }
    }
  }

  void gate(std::string name, std::size_t begin, Cursor& c) {
    std::string params;
    skip_ws(c);
    if (c.pos < c.end && text_[c.pos] == '(') {
      int depth = 0;
      std::size_t open = c.pos;
      for (; c.pos < c.end; ++c.pos) {
        if (text_[c.pos] == '(') ++depth;
        if (text_[c.pos] == ')' && --depth == 0) break;
      }
      if (c.pos >= c.end) fail("unbalanced parentheses", open);
      params = std::string(text_.substr(open + 1, c.pos - open - 1));
      ++c.pos;
    }
    std::vector<std::pair<int, std::size_t>> args;
    do {
      skip_ws(c);
      std::size_t at = c.pos;
      args.emplace_back(operand(c).second, at);
    } while (accept(c, ','));
    expect_end(c);

    if (args.size() >= 3) {
      fail("gates with three or more operands are not supported", begin);
    }
    if (args.size() == 2) {
      GateKind kind;
      if (name == "cx" || name == "CX") {
        kind = GateKind::CNOT;
      } else if (name == "swap") {
        kind = GateKind::SWAP;
      } else {
        fail("unsupported two-qubit gate '" + name + "'", begin);
      }
      if (!params.empty()) fail("unexpected parameters on '" + name + "'", begin);
      if (args[0].first < 0 || args[1].first < 0) {
        fail("register-wide two-qubit gates are not supported", begin);
      }
      if (args[0].first == args[1].first) {
        fail("duplicate operands", args[1].second);
      }
      Gate g = kind == GateKind::CNOT
                   ? Gate::cnot(args[0].first, args[1].first)
                   : Gate::swap(args[0].first, args[1].first);
      push(std::move(g));
      return;
    }
    if (name == "cx" || name == "CX" || name == "swap") {
      fail("'" + name + "' needs two operands", begin);
    }
    int q = args[0].first;
    if (q >= 0) {
      push(Gate::one_qubit(name, q, params));
    } else {
      for (int i = 0; i < prog_.num_qubits; ++i) {
        push(Gate::one_qubit(name, i, params));
      }
    }
  }

  void push(Gate g) {
    g.id = prog_.gates.size();
    prog_.gates.push_back(std::move(g));
  }

  std::string_view text_;
  std::vector<std::size_t> line_starts_;
  QasmProgram prog_;
};

}  // namespace

QasmProgram parse_qasm(std::string_view text) {
  return Parser(text).run();
}

QasmProgram read_qasm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_qasm(ss.str());
}

std::string write_qasm(const QasmProgram& prog) {
  std::ostringstream out;
  out << "OPENQASM " << prog.version << ";\n";
  for (const auto& inc : prog.includes) out << "include \"" << inc << "\";\n";
  const std::string& r = prog.qreg_name;
  out << "qreg " << r << "[" << prog.num_qubits << "];\n";
  for (const auto& c : prog.cregs) out << "creg " << c << ";\n";
  for (const auto& g : prog.gates) {
    out << g.name;
    if (!g.params.empty()) out << "(" << g.params << ")";
    out << " " << r << "[" << g.q0 << "]";
    if (g.is_two_qubit()) out << "," << r << "[" << g.q1 << "]";
    out << ";\n";
  }
  for (const auto& m : prog.measurements) {
    out << "measure " << r << "[" << m.qubit << "] -> " << m.target << ";\n";
  }
  return out.str();
}

}  // namespace tsmap
