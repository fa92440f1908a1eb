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
#include <string>
#include <vector>

#include "tsmap/qasm.hpp"

namespace tsmap {

using GateId = std::size_t;

/**
 * Two-qubit gates of a circuit partitioned into layers of gates acting on
 * disjoint qubits. One-qubit gates do not occupy layers; each one rides
 * along with the closest preceding two-qubit gate on its qubit, or with the
 * circuit start when there is none.
 */
struct LayeredCircuit {
  int width = 0;
  std::vector<Gate> gates;                   // indexed by GateId
  std::vector<std::vector<GateId>> layers;
  std::vector<int> layer_of;                 // -1 for one-qubit gates
  std::vector<std::vector<GateId>> riders;   // one-qubit gates per anchor
  std::vector<GateId> leading;               // one-qubit gates before any anchor

  [[nodiscard]] std::size_t depth() const { return layers.size(); }
};

/// Replaces every SWAP gate by three CNOTs so only CNOTs remain two-qubit.
QasmProgram lower_swaps(const QasmProgram& prog);

LayeredCircuit layer_asap(const QasmProgram& prog);

/**
 * Delays each two-qubit gate that has a successor into the layer right
 * before its earliest successor, when no gate there shares a qubit with it.
 * Gates without successors keep their layer.
 */
LayeredCircuit compact_lifetime(const LayeredCircuit& lc);

/// Checks the layering invariants. Returns an empty string when valid.
std::string validate_layering(const LayeredCircuit& lc);

/**
 * Undirected weighted interaction graph over logical qubits. Edge weights
 * count CNOTs on the pair; artificial edges (see attach_isolated) have weight
 * 0 and are flagged.
 */
class InteractionGraph {
 public:
  explicit InteractionGraph(int n = 0);

  void add_interaction(int a, int b, int count = 1);
  void add_artificial(int a, int b);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int weight(int a, int b) const { return weight_[idx(a, b)]; }
  [[nodiscard]] bool has_edge(int a, int b) const { return edge_[idx(a, b)] != 0; }
  [[nodiscard]] bool is_artificial(int a, int b) const {
    return edge_[idx(a, b)] == 2;
  }
  [[nodiscard]] const std::vector<int>& neighbors(int a) const { return adj_[a]; }
  [[nodiscard]] int degree(int a) const { return static_cast<int>(adj_[a].size()); }
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] long total_weight() const;
  [[nodiscard]] std::vector<int> isolated() const;

 private:
  [[nodiscard]] std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }
  void link(int a, int b, char kind);

  int n_;
  std::vector<int> weight_;
  std::vector<char> edge_;  // 0 none, 1 real, 2 artificial
  std::vector<std::vector<int>> adj_;
};

InteractionGraph build_interaction_graph(const QasmProgram& prog);

/// ASAP layer count over all gates, one-qubit gates included.
std::size_t circuit_depth(const QasmProgram& prog);

}  // namespace tsmap
