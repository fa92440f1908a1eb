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

#include "tsmap/pipeline.hpp"

#include <chrono>

#include "tsmap/circuit.hpp"

namespace tsmap {

RoutedResult transform(
    const QasmProgram& input, const CouplingGraph& cg, const DistanceTable& dt,
    const PipelineOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  QasmProgram source = lower_swaps(input);
  LayeredCircuit lc = compact_lifetime(layer_asap(source));
  InteractionGraph ig = build_interaction_graph(source);
  Mapping init = initial_mapping(ig, cg, dt, opts.match);
  RoutingTrace trace = route_circuit(lc, init, cg, dt, opts.router);
  RoutedResult rr = assemble_output(trace, lc, source, cg);
  rr.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rr;
}

}  // namespace tsmap
