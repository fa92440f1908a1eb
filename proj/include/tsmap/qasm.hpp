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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsmap {

enum class GateKind { CNOT, SWAP, H, OneQubit };

/**
 * One circuit instruction. Two-qubit gates store control in `q0` and target
 * in `q1`; one-qubit gates leave `q1` at -1. Names and parameter text of
 * one-qubit gates are kept verbatim so they can be re-emitted unchanged.
 */
struct Gate {
  GateKind kind = GateKind::OneQubit;
  std::string name;
  std::string params;
  int q0 = -1;
  int q1 = -1;
  std::size_t id = 0;

  [[nodiscard]] bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::SWAP;
  }
  [[nodiscard]] unsigned arity() const { return is_two_qubit() ? 2 : 1; }

  static Gate cnot(int control, int target, std::size_t id = 0);
  static Gate swap(int a, int b, std::size_t id = 0);
  static Gate h(int q, std::size_t id = 0);
  static Gate one_qubit(
      std::string name, int q, std::string params = {}, std::size_t id = 0);

  /// Same operation on the same operands; ids are ignored.
  [[nodiscard]] bool same_op(const Gate& other) const;
};

struct Measurement {
  int qubit = -1;
  std::string target;  // classical bit reference, e.g. "c[3]"
};

/**
 * A parsed OpenQASM 2.0 program with a single quantum register. Classical
 * register declarations and measurements are kept apart from the gate list
 * and re-emitted after the gate body.
 */
struct QasmProgram {
  std::string version = "2.0";
  std::vector<std::string> includes;
  std::string qreg_name = "q";
  int num_qubits = 0;
  std::vector<std::string> cregs;  // verbatim "c[5]" declarations
  std::vector<Gate> gates;
  std::vector<Measurement> measurements;

  [[nodiscard]] std::size_t count_two_qubit() const;
};

class QasmError : public std::runtime_error {
 public:
  QasmError(const std::string& what, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

QasmProgram parse_qasm(std::string_view text);
QasmProgram read_qasm_file(const std::string& path);
std::string write_qasm(const QasmProgram& prog);

bool operator==(const Gate& a, const Gate& b);
bool operator==(const Measurement& a, const Measurement& b);
bool operator==(const QasmProgram& a, const QasmProgram& b);

}  // namespace tsmap
