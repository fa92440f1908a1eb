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

#include "tsmap/coupling.hpp"
#include "tsmap/initial_map.hpp"
#include "tsmap/output.hpp"
#include "tsmap/qasm.hpp"
#include "tsmap/tabu_router.hpp"

namespace tsmap {

struct PipelineOptions {
  RouterConfig router;
  MatchOptions match;
};

/**
 * Full transformation of one circuit: lower swaps, layer, build the
 * interaction graph, pick the initial mapping, route and emit. Runtime in
 * the returned stats covers all of it.
 */
RoutedResult transform(
    const QasmProgram& input, const CouplingGraph& cg, const DistanceTable& dt,
    const PipelineOptions& opts = {});

}  // namespace tsmap
