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

#include "tsmap/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace tsmap {

namespace {

CheckResult fail_at(std::size_t index, std::string msg) {
  CheckResult r;
  r.ok = false;
  r.gate_index = index;
  r.message = "gate " + std::to_string(index) + ": " + std::move(msg);
  return r;
}

CheckResult fail(std::string msg) {
  CheckResult r;
  r.ok = false;
  r.message = std::move(msg);
  return r;
}

std::string describe(const Gate& g) {
  std::string s = g.name;
  if (!g.params.empty()) s += "(" + g.params + ")";
  s += " " + std::to_string(g.q0);
  if (g.q1 >= 0) s += "," + std::to_string(g.q1);
  return s;
}

}  // namespace

CheckResult structural_check(
    const QasmProgram& source, const QasmProgram& output, const RoutedResult& rr,
    const CouplingGraph& cg) {
  if (output.num_qubits != cg.size()) {
    return fail("output register has " + std::to_string(output.num_qubits) +
                " qubits, device has " + std::to_string(cg.size()));
  }
  const int n = source.num_qubits;
  if (rr.initial_mapping.num_logical() != n || !rr.initial_mapping.is_total()) {
    return fail("initial mapping does not cover the source register");
  }

  std::vector<std::deque<std::size_t>> queue(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < source.gates.size(); ++i) {
    const Gate& g = source.gates[i];
    if (g.kind == GateKind::SWAP) return fail("source still contains swap gates");
    queue[static_cast<std::size_t>(g.q0)].push_back(i);
    if (g.q1 >= 0) queue[static_cast<std::size_t>(g.q1)].push_back(i);
  }

  Mapping m = rr.initial_mapping;
  // Matches a logical gate against the queue fronts of its qubits.
  auto consume = [&](const Gate& logical, std::size_t at) -> CheckResult {
    const int qs[2] = {logical.q0, logical.q1};
    std::size_t want = 0;
    for (int k = 0; k < static_cast<int>(logical.arity()); ++k) {
      auto& qq = queue[static_cast<std::size_t>(qs[k])];
      if (qq.empty()) {
        return fail_at(at, describe(logical) + " has no unconsumed source gate on q" +
                               std::to_string(qs[k]));
      }
      if (k == 0) want = qq.front();
      if (qq.front() != want || !source.gates[want].same_op(logical)) {
        return fail_at(at, "logical " + describe(logical) + " is out of order or unknown");
      }
    }
    for (int k = 0; k < static_cast<int>(logical.arity()); ++k) {
      queue[static_cast<std::size_t>(qs[k])].pop_front();
    }
    return {};
  };
  auto to_logical = [&](const Gate& g, std::size_t at, Gate& out) -> CheckResult {
    out = g;
    out.q0 = m.logical(g.q0);
    if (out.q0 == kUnmapped) return fail_at(at, "acts on unoccupied physical " + std::to_string(g.q0));
    if (g.q1 >= 0) {
      out.q1 = m.logical(g.q1);
      if (out.q1 == kUnmapped) {
        return fail_at(at, "acts on unoccupied physical " + std::to_string(g.q1));
      }
    }
    return {};
  };

  for (std::size_t i = 0; i < output.gates.size(); ++i) {
    const Gate& g = output.gates[i];
    if (g.q0 < 0 || g.q0 >= cg.size() || g.q1 >= cg.size()) {
      return fail_at(i, "operand outside the device");
    }
    if (g.kind == GateKind::SWAP) return fail_at(i, "undecomposed swap");
    if (g.kind == GateKind::CNOT && !cg.has_directed(g.q0, g.q1)) {
      return fail_at(i, "cx " + std::to_string(g.q0) + "," + std::to_string(g.q1) +
                            " is not a device edge");
    }
  }

  std::size_t i = 0;
  std::size_t next_seg = 0;
  while (i < output.gates.size()) {
    const Segment* seg = nullptr;
    if (next_seg < rr.segments.size()) {
      seg = &rr.segments[next_seg];
      if (seg->begin < i) return fail_at(seg->begin, "overlapping segments");
      if (seg->begin != i) seg = nullptr;
    }
    if (seg == nullptr) {
      Gate lg;
      if (auto r = to_logical(output.gates[i], i, lg); !r) return r;
      if (auto r = consume(lg, i); !r) return r;
      ++i;
      continue;
    }
    ++next_seg;
    std::vector<Gate> expected;
    if (seg->kind == SegmentKind::Swap) {
      if (!cg.adjacent(seg->edge.a, seg->edge.b)) return fail_at(i, "swap on a non-edge");
      expected = decompose_swap(seg->edge, cg);
    } else {
      const int c = seg->edge.a;
      const int t = seg->edge.b;
      expected = {Gate::h(c), Gate::h(t), Gate::cnot(t, c), Gate::h(c), Gate::h(t)};
    }
    if (seg->end != i + expected.size() || seg->end > output.gates.size()) {
      return fail_at(i, "segment has the wrong length");
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (!output.gates[i + k].same_op(expected[k])) {
        return fail_at(i + k, "segment gate " + describe(output.gates[i + k]) + ", expected " +
                                  describe(expected[k]));
      }
    }
    if (seg->kind == SegmentKind::Swap) {
      m.swap_physical(seg->edge.a, seg->edge.b);
    } else {
      Gate lg;
      if (auto r = to_logical(Gate::cnot(seg->edge.a, seg->edge.b), i, lg); !r) return r;
      if (auto r = consume(lg, i); !r) return r;
    }
    i = seg->end;
  }
  if (next_seg != rr.segments.size()) return fail("segment past the end of the output");

  for (int q = 0; q < n; ++q) {
    if (!queue[static_cast<std::size_t>(q)].empty()) {
      return fail("source gate " + std::to_string(queue[static_cast<std::size_t>(q)].front()) +
                  " never executed");
    }
  }
  if (!(m == rr.final_mapping)) return fail("final mapping disagrees with the replay");
  if (output.measurements.size() != source.measurements.size()) {
    return fail("measurement count changed");
  }
  for (std::size_t k = 0; k < source.measurements.size(); ++k) {
    const auto& s = source.measurements[k];
    const auto& o = output.measurements[k];
    if (o.target != s.target || o.qubit != m.physical(s.qubit)) {
      return fail("measurement " + std::to_string(k) + " reads the wrong qubit");
    }
  }
  return {};
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  double parse() {
    double v = sum();
    skip();
    if (pos_ != s_.size()) error("trailing text");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw SimulationError("bad parameter '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }
  double product() {
    double v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        v /= power();
      } else {
        return v;
      }
    }
  }
  double power() {
    double base = unary();
    if (eat('^')) return std::pow(base, power());
    return base;
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }
  double atom() {
    skip();
    if (eat('(')) {
      double v = sum();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "pi") return std::numbers::pi;
      if (!eat('(')) error("unknown identifier '" + id + "'");
      double x = sum();
      if (!eat(')')) error("missing ')'");
      if (id == "sin") return std::sin(x);
      if (id == "cos") return std::cos(x);
      if (id == "tan") return std::tan(x);
      if (id == "exp") return std::exp(x);
      if (id == "ln") return std::log(x);
      if (id == "sqrt") return std::sqrt(x);
      error("unknown function '" + id + "'");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(std::string(s_.substr(pos_)), &used);
    } catch (const std::exception&) {
      error("expected a number");
    }
    pos_ += used;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<double> split_params(const std::string& params) {
  std::vector<double> out;
  if (params.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= params.size(); ++i) {
    if (i == params.size() || (params[i] == ',' && depth == 0)) {
      out.push_back(eval_param(std::string_view(params).substr(start, i - start)));
      start = i + 1;
    } else if (params[i] == '(') {
      ++depth;
    } else if (params[i] == ')') {
      --depth;
    }
  }
  return out;
}

Matrix2 u3(double theta, double phi, double lambda) {
  using namespace std::complex_literals;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {c, -std::exp(1i * lambda) * s, std::exp(1i * phi) * s,
          std::exp(1i * (phi + lambda)) * c};
}

}  // namespace

double eval_param(std::string_view expr) { return ExprParser(expr).parse(); }

Matrix2 gate_matrix(const std::string& name, const std::string& params) {
  using namespace std::complex_literals;
  const auto p = split_params(params);
  auto need = [&](std::size_t k) {
    if (p.size() != k) {
      throw SimulationError("gate '" + name + "' takes " + std::to_string(k) + " parameters");
    }
  };
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name == "id" || name == "u0") return {1.0, 0.0, 0.0, 1.0};
  if (name == "h") return {r2, r2, r2, -r2};
  if (name == "x") return {0.0, 1.0, 1.0, 0.0};
  if (name == "y") return {0.0, -1i, 1i, 0.0};
  if (name == "z") return {1.0, 0.0, 0.0, -1.0};
  if (name == "s") return {1.0, 0.0, 0.0, 1i};
  if (name == "sdg") return {1.0, 0.0, 0.0, -1i};
  if (name == "t") return {1.0, 0.0, 0.0, std::exp(1i * (std::numbers::pi / 4))};
  if (name == "tdg") return {1.0, 0.0, 0.0, std::exp(-1i * (std::numbers::pi / 4))};
  if (name == "sx") return {0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i};
  if (name == "sxdg") return {0.5 - 0.5i, 0.5 + 0.5i, 0.5 + 0.5i, 0.5 - 0.5i};
  if (name == "u1" || name == "p") {
    need(1);
    return {1.0, 0.0, 0.0, std::exp(1i * p[0])};
  }
  if (name == "rz") {
    need(1);
    return {std::exp(-1i * (p[0] / 2)), 0.0, 0.0, std::exp(1i * (p[0] / 2))};
  }
  if (name == "rx") {
    need(1);
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    return {c, -1i * s, -1i * s, c};
  }
  if (name == "ry") {
    need(1);
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    return {c, -s, s, c};
  }
  if (name == "u2") {
    need(2);
    return u3(std::numbers::pi / 2, p[0], p[1]);
  }
  if (name == "u3" || name == "u" || name == "U") {
    need(3);
    return u3(p[0], p[1], p[2]);
  }
  throw SimulationError("no matrix for gate '" + name + "'");
}

namespace {

void apply_one(StateVector& st, int q, const Matrix2& u) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = st[i];
    const Amplitude b = st[i | bit];
    st[i] = u[0] * a + u[1] * b;
    st[i | bit] = u[2] * a + u[3] * b;
  }
}

void apply_cnot(StateVector& st, int c, int t) {
  const std::size_t cb = std::size_t{1} << c;
  const std::size_t tb = std::size_t{1} << t;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(st[i], st[i | tb]);
  }
}

}  // namespace

void apply_program(const QasmProgram& prog, StateVector& state, const CustomGates& custom) {
  if (state.size() != (std::size_t{1} << prog.num_qubits)) {
    throw SimulationError("state size does not match the register");
  }
  std::map<std::pair<std::string, std::string>, Matrix2> cache;
  for (const Gate& g : prog.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
        apply_cnot(state, g.q0, g.q1);
        break;
      case GateKind::SWAP:
        apply_cnot(state, g.q0, g.q1);
        apply_cnot(state, g.q1, g.q0);
        apply_cnot(state, g.q0, g.q1);
        break;
      case GateKind::H:
      case GateKind::OneQubit: {
        if (auto it = custom.find(g.name); it != custom.end()) {
          apply_one(state, g.q0, it->second);
          break;
        }
        auto key = std::make_pair(g.name, g.params);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, gate_matrix(g.name, g.params)).first;
        apply_one(state, g.q0, it->second);
        break;
      }
    }
  }
}

StateVector simulate_statevector(
    const QasmProgram& prog, int max_qubits, const CustomGates& custom) {
  if (prog.num_qubits > max_qubits) {
    throw SimulationError(std::to_string(prog.num_qubits) + " qubits exceeds the limit of " +
                          std::to_string(max_qubits));
  }
  StateVector st(std::size_t{1} << prog.num_qubits, 0.0);
  st[0] = 1.0;
  apply_program(prog, st, custom);
  return st;
}

namespace {

// Compacting the output to its touched qubits can exceed the source width
// when swaps wander through free slots; this caps the simulated size.
constexpr int kCompactLimit = 20;

StateVector product_state(const std::vector<std::array<Amplitude, 2>>& qubits) {
  StateVector st(std::size_t{1} << qubits.size(), 1.0);
  for (std::size_t i = 0; i < st.size(); ++i) {
    for (std::size_t q = 0; q < qubits.size(); ++q) st[i] *= qubits[q][(i >> q) & 1U];
  }
  return st;
}

}  // namespace

CheckResult assert_equivalence(
    const QasmProgram& source, const QasmProgram& output, const RoutedResult& rr,
    std::uint64_t seed, int trials, double tol, int max_qubits) {
  const int n = source.num_qubits;
  if (n > max_qubits) {
    return fail(std::to_string(n) + " qubits exceeds the equivalence limit of " +
                std::to_string(max_qubits));
  }
  const Mapping& init = rr.initial_mapping;
  const Mapping& fin = rr.final_mapping;

  std::set<int> touched;
  for (int q = 0; q < n; ++q) touched.insert(init.physical(q));
  for (const Gate& g : output.gates) {
    touched.insert(g.q0);
    if (g.q1 >= 0) touched.insert(g.q1);
  }
  const int width = static_cast<int>(touched.size());
  if (width > kCompactLimit) return fail("output touches too many qubits to simulate");
  std::vector<int> local(static_cast<std::size_t>(output.num_qubits), -1);
  std::vector<int> phys_of;
  for (int p : touched) {
    local[static_cast<std::size_t>(p)] = static_cast<int>(phys_of.size());
    phys_of.push_back(p);
  }
  QasmProgram compact = output;
  compact.num_qubits = width;
  compact.measurements.clear();
  for (Gate& g : compact.gates) {
    g.q0 = local[static_cast<std::size_t>(g.q0)];
    if (g.q1 >= 0) g.q1 = local[static_cast<std::size_t>(g.q1)];
  }
  QasmProgram src = source;
  src.measurements.clear();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CheckResult result;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::array<Amplitude, 2>> psi(static_cast<std::size_t>(n));
    for (auto& v : psi) {
      v = {Amplitude(normal(rng), normal(rng)), Amplitude(normal(rng), normal(rng))};
      const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
      v[0] /= norm;
      v[1] /= norm;
    }
    std::vector<std::array<Amplitude, 2>> phys(static_cast<std::size_t>(width),
                                               {Amplitude(1.0), Amplitude(0.0)});
    for (int k = 0; k < width; ++k) {
      const int q = init.logical(phys_of[static_cast<std::size_t>(k)]);
      if (q != kUnmapped) phys[static_cast<std::size_t>(k)] = psi[static_cast<std::size_t>(q)];
    }

    StateVector want = product_state(psi);
    apply_program(src, want);
    StateVector got = product_state(phys);
    apply_program(compact, got);

    // Index in the compacted output for each source basis state.
    std::vector<std::size_t> image(want.size(), 0);
    for (std::size_t x = 0; x < want.size(); ++x) {
      std::size_t y = 0;
      for (int q = 0; q < n; ++q) {
        if ((x >> q) & 1U) {
          y |= std::size_t{1} << local[static_cast<std::size_t>(fin.physical(q))];
        }
      }
      image[x] = y;
    }
    std::size_t pivot = 0;
    for (std::size_t x = 1; x < want.size(); ++x) {
      if (std::abs(want[x]) > std::abs(want[pivot])) pivot = x;
    }
    const Amplitude phase = got[image[pivot]] / want[pivot];
    std::vector<char> covered(got.size(), 0);
    double worst = std::abs(std::abs(phase) - 1.0);
    for (std::size_t x = 0; x < want.size(); ++x) {
      worst = std::max(worst, std::abs(got[image[x]] - phase * want[x]));
      covered[image[x]] = 1;
    }
    for (std::size_t y = 0; y < got.size(); ++y) {
      if (!covered[y]) worst = std::max(worst, std::abs(got[y]));
    }
    result.deviation = std::max(result.deviation, worst);
    if (worst > tol) {
      std::ostringstream msg;
      msg << "trial " << trial << ": amplitude deviation " << worst << " exceeds " << tol;
      result.ok = false;
      result.message = msg.str();
      return result;
    }
  }
  return result;
}

}  // namespace tsmap
