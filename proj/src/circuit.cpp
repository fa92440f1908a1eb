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

#include "tsmap/circuit.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace tsmap {

QasmProgram lower_swaps(const QasmProgram& prog) {
  QasmProgram out = prog;
  out.gates.clear();
  for (const Gate& g : prog.gates) {
    if (g.kind == GateKind::SWAP) {
      out.gates.push_back(Gate::cnot(g.q0, g.q1));
      out.gates.push_back(Gate::cnot(g.q1, g.q0));
      out.gates.push_back(Gate::cnot(g.q0, g.q1));
    } else {
      out.gates.push_back(g);
    }
  }
  for (std::size_t i = 0; i < out.gates.size(); ++i) out.gates[i].id = i;
  return out;
}

LayeredCircuit layer_asap(const QasmProgram& prog) {
  LayeredCircuit lc;
  lc.width = prog.num_qubits;
  lc.gates = prog.gates;
  lc.layer_of.assign(lc.gates.size(), -1);
  lc.riders.assign(lc.gates.size(), {});

  constexpr GateId none = std::numeric_limits<GateId>::max();
  std::vector<int> next_free(static_cast<std::size_t>(prog.num_qubits), 0);
  std::vector<GateId> anchor(static_cast<std::size_t>(prog.num_qubits), none);

  for (GateId id = 0; id < lc.gates.size(); ++id) {
    const Gate& g = lc.gates[id];
    if (!g.is_two_qubit()) {
      GateId a = anchor[static_cast<std::size_t>(g.q0)];
      if (a == none) {
        lc.leading.push_back(id);
      } else {
        lc.riders[a].push_back(id);
      }
      continue;
    }
    auto c = static_cast<std::size_t>(g.q0);
    auto t = static_cast<std::size_t>(g.q1);
    int layer = std::max(next_free[c], next_free[t]);
    if (static_cast<std::size_t>(layer) == lc.layers.size()) lc.layers.emplace_back();
    lc.layers[static_cast<std::size_t>(layer)].push_back(id);
    lc.layer_of[id] = layer;
    next_free[c] = next_free[t] = layer + 1;
    anchor[c] = anchor[t] = id;
  }
  return lc;
}

LayeredCircuit compact_lifetime(const LayeredCircuit& lc) {
  LayeredCircuit out = lc;
  const std::size_t n = lc.gates.size();

  // First later two-qubit gate on each operand.
  constexpr GateId none = std::numeric_limits<GateId>::max();
  std::vector<std::array<GateId, 2>> succ(n, {none, none});
  std::vector<GateId> last(static_cast<std::size_t>(lc.width), none);
  for (GateId id = n; id-- > 0;) {
    const Gate& g = lc.gates[id];
    if (!g.is_two_qubit()) continue;
    succ[id] = {last[static_cast<std::size_t>(g.q0)], last[static_cast<std::size_t>(g.q1)]};
    last[static_cast<std::size_t>(g.q0)] = last[static_cast<std::size_t>(g.q1)] = id;
  }

  // Later gates first so that a successor has settled before its
  // predecessor looks at it.
  std::vector<int>& layer_of = out.layer_of;
  for (GateId id = n; id-- > 0;) {
    if (!lc.gates[id].is_two_qubit()) continue;
    int earliest = std::numeric_limits<int>::max();
    for (GateId s : succ[id]) {
      if (s != none) earliest = std::min(earliest, layer_of[s]);
    }
    if (earliest == std::numeric_limits<int>::max()) continue;
    int target = earliest - 1;
    if (target <= layer_of[id]) continue;
    const Gate& g = lc.gates[id];
    bool conflict = false;
    for (GateId other : out.layers[static_cast<std::size_t>(target)]) {
      const Gate& o = lc.gates[other];
      if (o.q0 == g.q0 || o.q0 == g.q1 || o.q1 == g.q0 || o.q1 == g.q1) {
        conflict = true;
        break;
      }
    }
    if (conflict) continue;
    auto& from = out.layers[static_cast<std::size_t>(layer_of[id])];
    from.erase(std::find(from.begin(), from.end(), id));
    out.layers[static_cast<std::size_t>(target)].push_back(id);
    layer_of[id] = target;
  }
  return out;
}

std::string validate_layering(const LayeredCircuit& lc) {
  std::vector<int> seen(lc.gates.size(), 0);
  for (std::size_t l = 0; l < lc.layers.size(); ++l) {
    std::set<int> used;
    for (GateId id : lc.layers[l]) {
      if (id >= lc.gates.size()) return "gate id out of range";
      const Gate& g = lc.gates[id];
      if (!g.is_two_qubit()) return "one-qubit gate in a layer";
      if (lc.layer_of[id] != static_cast<int>(l)) return "layer_of mismatch";
      if (!used.insert(g.q0).second || !used.insert(g.q1).second) {
        return "layer " + std::to_string(l) + " reuses a qubit";
      }
      ++seen[id];
    }
  }
  std::vector<int> last_layer(static_cast<std::size_t>(lc.width), -1);
  for (GateId id = 0; id < lc.gates.size(); ++id) {
    const Gate& g = lc.gates[id];
    if (!g.is_two_qubit()) continue;
    if (seen[id] != 1) return "gate " + std::to_string(id) + " not placed exactly once";
    int l = lc.layer_of[id];
    for (int q : {g.q0, g.q1}) {
      if (last_layer[static_cast<std::size_t>(q)] >= l) {
        return "gate " + std::to_string(id) + " breaks dependency order";
      }
      last_layer[static_cast<std::size_t>(q)] = l;
    }
  }
  return {};
}

InteractionGraph::InteractionGraph(int n)
    : n_(n),
      weight_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      edge_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      adj_(static_cast<std::size_t>(n)) {}

void InteractionGraph::link(int a, int b, char kind) {
  if (edge_[idx(a, b)] == 0) {
    auto insert_sorted = [](std::vector<int>& v, int x) {
      v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(a)], b);
    insert_sorted(adj_[static_cast<std::size_t>(b)], a);
    edge_[idx(a, b)] = edge_[idx(b, a)] = kind;
  } else if (kind == 1) {
    edge_[idx(a, b)] = edge_[idx(b, a)] = 1;
  }
}

void InteractionGraph::add_interaction(int a, int b, int count) {
  link(a, b, 1);
  weight_[idx(a, b)] += count;
  weight_[idx(b, a)] += count;
}

void InteractionGraph::add_artificial(int a, int b) { link(a, b, 2); }

std::size_t InteractionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

long InteractionGraph::total_weight() const {
  long sum = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) sum += weight(a, b);
  }
  return sum;
}

std::vector<int> InteractionGraph::isolated() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (adj_[static_cast<std::size_t>(a)].empty()) out.push_back(a);
  }
  return out;
}

InteractionGraph build_interaction_graph(const QasmProgram& prog) {
  InteractionGraph ig(prog.num_qubits);
  for (const Gate& g : prog.gates) {
    if (g.is_two_qubit()) ig.add_interaction(g.q0, g.q1);
  }
  return ig;
}

std::size_t circuit_depth(const QasmProgram& prog) {
  std::vector<std::size_t> level(static_cast<std::size_t>(prog.num_qubits), 0);
  std::size_t depth = 0;
  for (const Gate& g : prog.gates) {
    auto a = static_cast<std::size_t>(g.q0);
    std::size_t l = level[a];
    if (g.is_two_qubit()) l = std::max(l, level[static_cast<std::size_t>(g.q1)]);
    ++l;
    level[a] = l;
    if (g.is_two_qubit()) level[static_cast<std::size_t>(g.q1)] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

}  // namespace tsmap
