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
#include <vector>

#include "tsmap/circuit.hpp"
#include "tsmap/coupling.hpp"
#include "tsmap/mapping.hpp"
#include "tsmap/qasm.hpp"
#include "tsmap/tabu_router.hpp"

namespace tsmap {

enum class SegmentKind { Swap, DirectionFix };

/// A run of output gates [begin, end) that implements one SWAP, or one
/// input CNOT turned around with Hadamards.
struct Segment {
  SegmentKind kind;
  std::size_t begin = 0;
  std::size_t end = 0;
  Edge edge;
};

struct RoutingStats {
  std::size_t n_qubits = 0;
  std::size_t gates_in = 0;
  std::size_t gates_out = 0;
  std::size_t added_gates = 0;
  std::size_t added_cnots = 0;
  std::size_t added_h = 0;
  std::size_t swaps = 0;
  std::size_t direction_fixes = 0;
  std::size_t depth_in = 0;
  std::size_t depth_out = 0;
  double runtime_ms = 0.0;
};

struct RoutedResult {
  QasmProgram source;  // routed input, SWAP gates lowered to CNOTs
  QasmProgram output;  // physical circuit on the device register
  Mapping initial_mapping;
  Mapping final_mapping;
  std::vector<Segment> segments;  // ascending, non-overlapping
  RoutingStats stats;
};

/**
 * Three alternating CNOTs on a two-way edge. On a one-way edge the three
 * CNOTs all run in the available direction and the middle one is wrapped in
 * Hadamards on both qubits, which flips it.
 */
std::vector<Gate> decompose_swap(Edge edge, const CouplingGraph& cg);

/// The physical form of an input CNOT: as is when the edge points the right
/// way, otherwise H on both, reversed CNOT, H on both.
std::vector<Gate> fix_direction(const Gate& g, const Mapping& m, const CouplingGraph& cg);

/// Drops back-to-back repeats of the same swap, which cancel.
std::vector<Edge> cancel_adjacent_swaps(const std::vector<Edge>& swaps);

/**
 * Emits, layer by layer, the decomposed swaps interleaved with the mapped
 * gates, each gate at the point the search executed it and followed by its
 * one-qubit riders. Measurements are remapped through the final mapping.
 */
RoutedResult assemble_output(
    const RoutingTrace& trace, const LayeredCircuit& lc, const QasmProgram& source,
    const CouplingGraph& cg);

}  // namespace tsmap
