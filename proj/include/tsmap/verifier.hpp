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

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsmap/coupling.hpp"
#include "tsmap/output.hpp"
#include "tsmap/qasm.hpp"

namespace tsmap {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;
using Matrix2 = std::array<Amplitude, 4>;  // row major

struct CheckResult {
  bool ok = true;
  std::optional<std::size_t> gate_index;  // first offending output gate
  std::string message;
  double deviation = 0.0;  // worst amplitude error, equivalence only

  explicit operator bool() const { return ok; }
};

/**
 * Replays the output against the source. Swap and direction-fix segments
 * must hold exactly the expected gates; every other gate must be, under the
 * mapping tracked through the swaps, the next unconsumed source gate on each
 * of its logical qubits. Every CNOT has to sit on a directed device edge.
 */
CheckResult structural_check(
    const QasmProgram& source, const QasmProgram& output, const RoutedResult& rr,
    const CouplingGraph& cg);

/// Evaluates a QASM parameter expression such as "-3*pi/4".
double eval_param(std::string_view expr);

/// The 2x2 matrix of a named one-qubit gate with its parameter text.
Matrix2 gate_matrix(const std::string& name, const std::string& params);

using CustomGates = std::map<std::string, Matrix2>;

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the program's gates to `state`; qubit k is bit k of the index.
void apply_program(
    const QasmProgram& prog, StateVector& state, const CustomGates& custom = {});

/// Runs the program from |0...0>; refuses more than `max_qubits` qubits.
StateVector simulate_statevector(
    const QasmProgram& prog, int max_qubits = 10, const CustomGates& custom = {});

/**
 * Simulates source and output on seeded random product states and compares
 * them after undoing the final mapping, up to global phase. Physical qubits
 * never touched by the output start and must end in |0>.
 */
CheckResult assert_equivalence(
    const QasmProgram& source, const QasmProgram& output, const RoutedResult& rr,
    std::uint64_t seed = 0, int trials = 8, double tol = 1e-9, int max_qubits = 10);

}  // namespace tsmap
