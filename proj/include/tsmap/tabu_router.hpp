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

#include <chrono>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsmap/circuit.hpp"
#include "tsmap/coupling.hpp"
#include "tsmap/mapping.hpp"

namespace tsmap {

enum class Evaluator { Num, Depth, Cca };

std::string_view to_string(Evaluator e);
Evaluator parse_evaluator(std::string_view name);

struct RouterConfig {
  Evaluator evaluator = Evaluator::Num;
  double delta = 0.5;      // attenuation of the look-ahead term
  int lookahead = 2;       // layers after the current one
  int tenure = 5;          // iterations a swapped edge stays tabu
  int max_iters = 0;       // per layer; 0 means 2 * |skeleton edges|
  double rho = 0.5;        // CCA smoothing factor
  double threshold = 0.0;  // CCA weight threshold; 0 means 10 * |skeleton edges|
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// A proposed SWAP on a skeleton edge and the mapping it leads to.
struct Candidate {
  Edge swap_edge;
  Mapping mapping_after;
  double value = 0.0;
};

/// Recently applied swaps, identified by undirected edge.
class TabuList {
 public:
  explicit TabuList(int tenure) : tenure_(tenure) {}

  void add(Edge e, long now);
  [[nodiscard]] bool is_tabu(Edge e, long now) const;
  /// Drops entries whose expiry is not after `now`.
  void expire(long now);
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] int tenure() const { return tenure_; }

 private:
  struct Entry {
    Edge edge;
    long expiry;
  };
  int tenure_;
  std::deque<Entry> entries_;
};

/// Per-edge weights for the configuration-checking score, with
/// threshold-triggered smoothing.
class CcaWeights {
 public:
  CcaWeights(std::size_t num_edges, double rho, double threshold);
  static CcaWeights from_values(std::vector<double> w, double rho, double threshold);

  [[nodiscard]] double weight(int edge_index) const {
    return w_[static_cast<std::size_t>(edge_index)];
  }
  [[nodiscard]] const std::vector<double>& values() const { return w_; }
  [[nodiscard]] double mean() const;
  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] double threshold() const { return threshold_; }

  /// Bumps the chosen edge by one and smooths if any weight passes the threshold.
  void select(int edge_index);
  /// w <- rho * w + (1 - rho) * mean, with the mean taken before the update.
  void smooth();

 private:
  std::vector<double> w_;
  double rho_;
  double threshold_;
};

/**
 * Gates visible to an evaluation: the current layer, the subset of it that
 * is not yet executable, and the look-ahead layers.
 */
struct EvalContext {
  const DistanceTable* dt = nullptr;
  const CouplingGraph* cg = nullptr;
  std::vector<Gate> current;
  std::vector<Gate> pending;
  std::vector<std::vector<Gate>> ahead;
  double delta = 0.5;
};

/// Builds the context for layer `layer` under mapping `m`.
EvalContext make_context(
    const LayeredCircuit& lc, std::size_t layer, const Mapping& m, const CouplingGraph& cg,
    const DistanceTable& dt, int lookahead, double delta);

/// Pending-gate distance sum plus delta times the look-ahead distance sum.
double evaluate_num(const Mapping& m, const EvalContext& ctx);

/**
 * Depth of the current layer plus delta times the depth of the look-ahead
 * layers merged, where a gate whose operands are d apart takes
 * 3 * (d - 1) + 1 steps.
 */
double evaluate_depth(const Mapping& m, const EvalContext& ctx);

struct MakeBreak {
  int make = 0;
  int brk = 0;
};

/// Gates of the pending set and look-ahead window that get strictly closer
/// (make) or strictly farther apart (break) going from `before` to `after`.
MakeBreak make_break(const Mapping& before, const Mapping& after, const EvalContext& ctx);

/// evaluate_num(after) - w(edge) * (make - break).
double evaluate_cca(
    const Mapping& before, const Candidate& c, const EvalContext& ctx, const CcaWeights& w);

using Scorer = std::function<double(const Candidate&)>;

/**
 * One candidate per distinct skeleton edge lying on a shortest path between
 * the operands of a gate in `layer` that is not yet adjacent. Ordered by
 * gate, then path, then position along the path.
 */
std::vector<Candidate> candidate_set(
    const std::vector<Gate>& layer, const Mapping& m, const DistanceTable& dt,
    const CouplingGraph& cg, const Scorer& score);

class RoutingError : public std::runtime_error {
 public:
  RoutingError(const std::string& what, std::size_t layer, std::vector<Edge> partial_swaps)
      : std::runtime_error(what), layer_(layer), partial_(std::move(partial_swaps)) {}
  [[nodiscard]] std::size_t layer() const { return layer_; }
  [[nodiscard]] const std::vector<Edge>& partial_swaps() const { return partial_; }

 private:
  std::size_t layer_;
  std::vector<Edge> partial_;
};

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search state that persists across the layers of one routing job.
struct RouterState {
  RouterState(const CouplingGraph& cg, const RouterConfig& cfg);

  TabuList tabu;
  CcaWeights weights;
  long clock = 0;
};

struct LayerResult {
  Mapping mapping;
  std::vector<Edge> swaps;
  /// For each gate of the layer, how many of `swaps` precede its execution.
  std::vector<std::size_t> executed_after;
};

/**
 * Inserts swaps until every gate of layer `layer` has been executed. A gate
 * executes, and leaves the search, as soon as its operands are adjacent, so
 * later swaps may move its qubits freely. Each step takes the lowest-scoring non-tabu candidate (first on ties); a
 * tabu candidate is admissible when it beats the best score seen on this
 * layer, and when every candidate is tabu the overall minimum is taken.
 */
LayerResult tabu_search_layer(
    const Mapping& start, std::size_t layer, const LayeredCircuit& lc, const CouplingGraph& cg,
    const DistanceTable& dt, const RouterConfig& cfg, RouterState& state);

struct RoutingTrace {
  Mapping initial;
  Mapping final;
  std::vector<std::vector<Edge>> layer_swaps;
  std::vector<std::vector<std::size_t>> layer_executed_after;

  [[nodiscard]] std::size_t swap_count() const;
};

RoutingTrace route_circuit(
    const LayeredCircuit& lc, const Mapping& initial, const CouplingGraph& cg,
    const DistanceTable& dt, const RouterConfig& cfg);

/// Resolves the 0 defaults of max_iters and threshold against a device.
RouterConfig resolve_defaults(RouterConfig cfg, const CouplingGraph& cg);

}  // namespace tsmap
