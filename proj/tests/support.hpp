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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tsmap/qasm.hpp"

namespace tsmap::testing {

// CNOTs g0..g8 of the five-qubit running example.
inline const std::vector<std::pair<int, int>> kFig3Pairs = {
    {2, 1}, {3, 4}, {3, 0}, {1, 3}, {0, 4}, {3, 1}, {4, 0}, {2, 0}, {4, 2}};

inline QasmProgram fig3_program() {
  QasmProgram p;
  p.includes = {"qelib1.inc"};
  p.num_qubits = 5;
  for (std::size_t i = 0; i < kFig3Pairs.size(); ++i) {
    p.gates.push_back(Gate::cnot(kFig3Pairs[i].first, kFig3Pairs[i].second, i));
  }
  return p;
}

inline std::string fig3_text() {
  std::string s = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\n";
  for (auto [c, t] : kFig3Pairs) {
    s += "cx q[" + std::to_string(c) + "],q[" + std::to_string(t) + "];\n";
  }
  return s;
}

/// Random CNOT circuit, optionally sprinkled with one-qubit gates.
inline QasmProgram random_program(std::mt19937_64& rng, int n, int cnots, bool one_qubit = true) {
  static const char* kNames[] = {"h", "t", "tdg", "x", "s", "rz", "u3"};
  QasmProgram p;
  p.includes = {"qelib1.inc"};
  p.num_qubits = n;
  std::uniform_int_distribution<int> q(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> pick(0, 6);
  for (int i = 0; i < cnots; ++i) {
    if (one_qubit && coin(rng) == 0) {
      std::string name = kNames[pick(rng)];
      std::string params;
      if (name == "rz") params = "pi/4";
      if (name == "u3") params = "0.3,-pi/7,1.1";
      p.gates.push_back(Gate::one_qubit(name, q(rng), params, p.gates.size()));
    }
    int a = q(rng);
    int b = q(rng);
    while (b == a) b = q(rng);
    p.gates.push_back(Gate::cnot(a, b, p.gates.size()));
  }
  return p;
}

}  // namespace tsmap::testing
