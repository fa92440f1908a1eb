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

namespace tsmap {

struct MatchOptions {
  std::size_t limit = 50;
  std::size_t node_budget = 1'000'000;
};

/**
 * Links every zero-degree logical qubit to the highest-degree vertex (lowest
 * index on ties) through a weight-0 artificial edge. When every vertex is
 * isolated the result is a star centred on q0.
 */
InteractionGraph attach_isolated(const InteractionGraph& ig);

/**
 * Backtracking search for edge-preserving embeddings of `ig` into the
 * skeleton of `cg`.
 *
 * Candidates are filtered by degree and by the sorted neighbour-degree
 * profile; vertices are matched in descending degree order (smaller
 * candidate sets first on ties), preferring vertices adjacent to the ones
 * already ordered. A vertex with no consistent candidate is left unmapped
 * and the search continues, so when no full embedding exists the mappings
 * with the most mapped vertices are returned. At most `opts.limit` mappings
 * are returned, all with the same mapped count.
 */
std::vector<Mapping> find_partial_mappings(
    const InteractionGraph& ig, const CouplingGraph& cg, const MatchOptions& opts = {});

/**
 * Completes a partial mapping. Unmapped logical qubits are processed in
 * ascending order; each goes to the lowest-index free neighbour of the
 * first mapped qubit (ordered by CNOT weight to it, then degree, then
 * index, all descending) whose image has one, falling back to the nearest
 * free qubit by BFS.
 */
Mapping complete_mapping(Mapping partial, const InteractionGraph& ig, const CouplingGraph& cg);

/// Sum over interaction edges of weight * distance between the images.
long mapping_score(const Mapping& m, const InteractionGraph& ig, const DistanceTable& dt);

/**
 * Keeps the candidates with the most mapped qubits, completes them, and
 * returns the one with the lowest weighted distance sum (first on ties).
 */
Mapping select_initial(
    const std::vector<Mapping>& candidates, const InteractionGraph& ig,
    const CouplingGraph& cg, const DistanceTable& dt);

/// attach_isolated + find_partial_mappings + select_initial.
Mapping initial_mapping(
    const InteractionGraph& ig, const CouplingGraph& cg, const DistanceTable& dt,
    const MatchOptions& opts = {});

}  // namespace tsmap
