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

#include "tsmap/output.hpp"

#include <stdexcept>

namespace tsmap {

std::vector<Gate> decompose_swap(Edge edge, const CouplingGraph& cg) {
  const int a = edge.a;
  const int b = edge.b;
  if (!cg.adjacent(a, b)) {
    throw std::invalid_argument(
        "swap on non-edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  if (cg.has_directed(a, b) && cg.has_directed(b, a)) {
    return {Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)};
  }
  const int c = cg.has_directed(a, b) ? a : b;
  const int t = c == a ? b : a;
  return {Gate::cnot(c, t), Gate::h(c), Gate::h(t), Gate::cnot(c, t),
          Gate::h(c),       Gate::h(t), Gate::cnot(c, t)};
}

std::vector<Gate> fix_direction(const Gate& g, const Mapping& m, const CouplingGraph& cg) {
  const int c = m.physical(g.q0);
  const int t = m.physical(g.q1);
  if (!cg.adjacent(c, t)) {
    throw std::invalid_argument(
        "operands on " + std::to_string(c) + " and " + std::to_string(t) + " are not adjacent");
  }
  if (cg.has_directed(c, t)) return {Gate::cnot(c, t)};
  return {Gate::h(c), Gate::h(t), Gate::cnot(t, c), Gate::h(c), Gate::h(t)};
}

std::vector<Edge> cancel_adjacent_swaps(const std::vector<Edge>& swaps) {
  std::vector<Edge> out;
  for (const Edge& e : swaps) {
    if (!out.empty() && out.back().normalized() == e.normalized()) {
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return out;
}

RoutedResult assemble_output(
    const RoutingTrace& trace, const LayeredCircuit& lc, const QasmProgram& source,
    const CouplingGraph& cg) {
  RoutedResult rr;
  rr.source = source;
  rr.initial_mapping = trace.initial;
  QasmProgram& out = rr.output;
  out.version = source.version;
  out.includes = source.includes;
  out.qreg_name = source.qreg_name;
  out.num_qubits = cg.size();
  out.cregs = source.cregs;

  Mapping m = trace.initial;
  auto emit = [&](Gate g) {
    g.id = out.gates.size();
    out.gates.push_back(std::move(g));
  };
  auto emit_rider = [&](GateId id) {
    Gate g = lc.gates[id];
    g.q0 = m.physical(g.q0);
    emit(std::move(g));
  };

  for (GateId id : lc.leading) emit_rider(id);
  auto emit_swap = [&](const Edge& e) {
    Segment seg{SegmentKind::Swap, out.gates.size(), 0, e};
    for (Gate& g : decompose_swap(e, cg)) emit(std::move(g));
    seg.end = out.gates.size();
    rr.segments.push_back(seg);
    m.swap_physical(e.a, e.b);
    ++rr.stats.swaps;
  };
  auto emit_gate = [&](GateId id) {
    const Gate& g = lc.gates[id];
    std::vector<Gate> phys = fix_direction(g, m, cg);
    if (phys.size() > 1) {
      Segment seg{SegmentKind::DirectionFix, out.gates.size(), 0,
                  Edge{m.physical(g.q0), m.physical(g.q1)}};
      for (Gate& p : phys) emit(std::move(p));
      seg.end = out.gates.size();
      rr.segments.push_back(seg);
      ++rr.stats.direction_fixes;
    } else {
      emit(std::move(phys.front()));
    }
    for (GateId r : lc.riders[id]) emit_rider(r);
  };

  for (std::size_t layer = 0; layer < lc.layers.size(); ++layer) {
    const auto& ids = lc.layers[layer];
    const std::vector<Edge> no_swaps;
    const auto& swaps = layer < trace.layer_swaps.size() ? trace.layer_swaps[layer] : no_swaps;
    // Gates run as soon as the search made them adjacent; swap runs between
    // two gate executions are where back-to-back repeats can cancel.
    std::vector<std::vector<GateId>> ready(swaps.size() + 1);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      std::size_t at = layer < trace.layer_executed_after.size()
                           ? trace.layer_executed_after[layer][k]
                           : swaps.size();
      ready[at].push_back(ids[k]);
    }
    std::vector<Edge> run;
    for (std::size_t i = 0; i <= swaps.size(); ++i) {
      if (!ready[i].empty()) {
        for (const Edge& e : cancel_adjacent_swaps(run)) emit_swap(e);
        run.clear();
        for (GateId id : ready[i]) emit_gate(id);
      }
      if (i < swaps.size()) run.push_back(swaps[i]);
    }
    for (const Edge& e : cancel_adjacent_swaps(run)) emit_swap(e);
  }
  if (!(m == trace.final)) {
    throw std::logic_error("replayed mapping disagrees with the routing trace");
  }
  rr.final_mapping = m;
  for (const Measurement& meas : source.measurements) {
    out.measurements.push_back({m.physical(meas.qubit), meas.target});
  }

  RoutingStats& st = rr.stats;
  st.n_qubits = static_cast<std::size_t>(source.num_qubits);
  st.gates_in = source.gates.size();
  st.gates_out = out.gates.size();
  st.added_gates = st.gates_out - st.gates_in;
  for (const Segment& s : rr.segments) {
    for (std::size_t i = s.begin; i < s.end; ++i) {
      if (out.gates[i].kind == GateKind::CNOT) {
        ++st.added_cnots;
      } else {
        ++st.added_h;
      }
    }
  }
  // A turned-around CNOT still carries the original one.
  st.added_cnots -= st.direction_fixes;
  st.depth_in = circuit_depth(source);
  st.depth_out = circuit_depth(out);
  return rr;
}

}  // namespace tsmap
