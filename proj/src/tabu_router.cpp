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

#include "tsmap/tabu_router.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tsmap {

std::string_view to_string(Evaluator e) {
  switch (e) {
    case Evaluator::Num:
      return "num";
    case Evaluator::Depth:
      return "dep";
    case Evaluator::Cca:
      return "cca";
  }
  return "?";
}

Evaluator parse_evaluator(std::string_view name) {
  if (name == "num") return Evaluator::Num;
  if (name == "dep" || name == "depth") return Evaluator::Depth;
  if (name == "cca") return Evaluator::Cca;
  throw std::invalid_argument("unknown evaluator '" + std::string(name) + "'");
}

void TabuList::expire(long now) {
  while (!entries_.empty() && entries_.front().expiry <= now) entries_.pop_front();
}

void TabuList::add(Edge e, long now) {
  if (tenure_ <= 0) return;
  expire(now + 1);
  entries_.push_back({e.normalized(), now + tenure_ + 1});
}

bool TabuList::is_tabu(Edge e, long now) const {
  const Edge key = e.normalized();
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& x) {
    return x.edge == key && x.expiry > now;
  });
}

CcaWeights::CcaWeights(std::size_t num_edges, double rho, double threshold)
    : w_(num_edges, 1.0), rho_(rho), threshold_(threshold) {}

CcaWeights CcaWeights::from_values(std::vector<double> w, double rho, double threshold) {
  CcaWeights out(0, rho, threshold);
  out.w_ = std::move(w);
  return out;
}

double CcaWeights::mean() const {
  if (w_.empty()) return 0.0;
  return std::accumulate(w_.begin(), w_.end(), 0.0) / static_cast<double>(w_.size());
}

void CcaWeights::smooth() {
  const double avg = mean();
  for (double& w : w_) w = rho_ * w + (1.0 - rho_) * avg;
}

void CcaWeights::select(int edge_index) {
  double& w = w_[static_cast<std::size_t>(edge_index)];
  w += 1.0;
  if (w > threshold_) smooth();
}

EvalContext make_context(
    const LayeredCircuit& lc, std::size_t layer, const Mapping& m, const CouplingGraph& cg,
    const DistanceTable& dt, int lookahead, double delta) {
  EvalContext ctx;
  ctx.dt = &dt;
  ctx.cg = &cg;
  ctx.delta = delta;
  for (GateId id : lc.layers[layer]) {
    const Gate& g = lc.gates[id];
    ctx.current.push_back(g);
    if (!is_adjacent_under(g, m, cg)) ctx.pending.push_back(g);
  }
  for (int k = 1; k <= lookahead && layer + static_cast<std::size_t>(k) < lc.layers.size(); ++k) {
    auto& out = ctx.ahead.emplace_back();
    for (GateId id : lc.layers[layer + static_cast<std::size_t>(k)]) out.push_back(lc.gates[id]);
  }
  return ctx;
}

namespace {

int gate_dist(const Gate& g, const Mapping& m, const DistanceTable& dt) {
  return dt.dist(m.physical(g.q0), m.physical(g.q1));
}

// Makespan of the gates in order, each holding both operands for
// 3 * (d - 1) + 1 steps.
int makespan(const std::vector<const Gate*>& gates, const Mapping& m, const DistanceTable& dt) {
  std::vector<int> ready(static_cast<std::size_t>(m.num_logical()), 0);
  int span = 0;
  for (const Gate* g : gates) {
    int d = gate_dist(*g, m, dt);
    int len = 3 * std::max(d - 1, 0) + 1;
    auto& rc = ready[static_cast<std::size_t>(g->q0)];
    auto& rt = ready[static_cast<std::size_t>(g->q1)];
    int end = std::max(rc, rt) + len;
    rc = rt = end;
    span = std::max(span, end);
  }
  return span;
}

}  // namespace

double evaluate_num(const Mapping& m, const EvalContext& ctx) {
  long now = 0;
  for (const Gate& g : ctx.pending) now += gate_dist(g, m, *ctx.dt);
  long later = 0;
  for (const auto& layer : ctx.ahead) {
    for (const Gate& g : layer) later += gate_dist(g, m, *ctx.dt);
  }
  return static_cast<double>(now) + ctx.delta * static_cast<double>(later);
}

double evaluate_depth(const Mapping& m, const EvalContext& ctx) {
  std::vector<const Gate*> cur;
  for (const Gate& g : ctx.current) cur.push_back(&g);
  std::vector<const Gate*> later;
  for (const auto& layer : ctx.ahead) {
    for (const Gate& g : layer) later.push_back(&g);
  }
  return static_cast<double>(makespan(cur, m, *ctx.dt)) +
         ctx.delta * static_cast<double>(makespan(later, m, *ctx.dt));
}

MakeBreak make_break(const Mapping& before, const Mapping& after, const EvalContext& ctx) {
  MakeBreak mb;
  auto count = [&](const Gate& g) {
    int d0 = gate_dist(g, before, *ctx.dt);
    int d1 = gate_dist(g, after, *ctx.dt);
    if (d1 < d0) ++mb.make;
    if (d1 > d0) ++mb.brk;
  };
  for (const Gate& g : ctx.pending) count(g);
  for (const auto& layer : ctx.ahead) {
    for (const Gate& g : layer) count(g);
  }
  return mb;
}

double evaluate_cca(
    const Mapping& before, const Candidate& c, const EvalContext& ctx, const CcaWeights& w) {
  MakeBreak mb = make_break(before, c.mapping_after, ctx);
  double weight = c.swap_edge.a < 0 ? 0.0 : w.weight(ctx.cg->skeleton_index(c.swap_edge));
  return evaluate_num(c.mapping_after, ctx) - weight * static_cast<double>(mb.make - mb.brk);
}

std::vector<Candidate> candidate_set(
    const std::vector<Gate>& layer, const Mapping& m, const DistanceTable& dt,
    const CouplingGraph& cg, const Scorer& score) {
  std::vector<Candidate> out;
  std::vector<char> seen(cg.skeleton_edges().size(), 0);
  for (const Gate& g : layer) {
    if (!g.is_two_qubit() || is_adjacent_under(g, m, cg)) continue;
    for (const Path& p : dt.paths(m.physical(g.q0), m.physical(g.q1))) {
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        Edge e{p[k], p[k + 1]};
        int idx = cg.skeleton_index(e);
        if (seen[static_cast<std::size_t>(idx)]) continue;
        seen[static_cast<std::size_t>(idx)] = 1;
        Candidate c{e, m, 0.0};
        c.mapping_after.swap_physical(e.a, e.b);
        c.value = score(c);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

RouterConfig resolve_defaults(RouterConfig cfg, const CouplingGraph& cg) {
  const auto edges = static_cast<int>(cg.skeleton_edges().size());
  if (cfg.max_iters <= 0) cfg.max_iters = 2 * edges;
  if (cfg.threshold <= 0.0) cfg.threshold = 10.0 * edges;
  return cfg;
}

RouterState::RouterState(const CouplingGraph& cg, const RouterConfig& cfg)
    : tabu(cfg.tenure),
      weights(cg.skeleton_edges().size(), cfg.rho, resolve_defaults(cfg, cg).threshold) {}

LayerResult tabu_search_layer(
    const Mapping& start, std::size_t layer, const LayeredCircuit& lc, const CouplingGraph& cg,
    const DistanceTable& dt, const RouterConfig& config, RouterState& state) {
  const RouterConfig cfg = resolve_defaults(config, cg);
  const auto& ids = lc.layers[layer];
  LayerResult result{start, {}, std::vector<std::size_t>(ids.size(), 0)};
  Mapping& cur = result.mapping;
  EvalContext ctx = make_context(lc, layer, cur, cg, dt, cfg.lookahead, cfg.delta);
  if (ctx.pending.empty()) return result;

  const Scorer score = [&](const Candidate& c) {
    switch (cfg.evaluator) {
      case Evaluator::Num:
        return evaluate_num(c.mapping_after, ctx);
      case Evaluator::Depth:
        return evaluate_depth(c.mapping_after, ctx);
      case Evaluator::Cca:
        return evaluate_cca(cur, c, ctx, state.weights);
    }
    return 0.0;
  };

  // Gates leave the layer the moment their operands are adjacent.
  std::vector<char> done(ids.size(), 0);
  auto execute_ready = [&] {
    ctx.current.clear();
    ctx.pending.clear();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (done[k]) continue;
      const Gate& g = lc.gates[ids[k]];
      if (is_adjacent_under(g, cur, cg)) {
        done[k] = 1;
        result.executed_after[k] = result.swaps.size();
      } else {
        ctx.current.push_back(g);
        ctx.pending.push_back(g);
      }
    }
  };
  execute_ready();
  double best_seen = score(Candidate{{-1, -1}, cur, 0.0});

  for (int iter = 1; !ctx.pending.empty(); ++iter) {
    if (iter > cfg.max_iters) {
      throw RoutingError(
          "layer " + std::to_string(layer) + " still blocked after " +
              std::to_string(cfg.max_iters) + " iterations",
          layer, result.swaps);
    }
    std::vector<Candidate> cands = candidate_set(ctx.pending, cur, dt, cg, score);
    if (cands.empty()) break;

    const long now = ++state.clock;
    std::size_t pick = cands.size();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool admissible =
          !state.tabu.is_tabu(cands[i].swap_edge, now) || cands[i].value < best_seen;
      if (admissible && (pick == cands.size() || cands[i].value < cands[pick].value)) pick = i;
    }
    if (pick == cands.size()) {
      // Amnesty: everything is tabu.
      pick = 0;
      for (std::size_t i = 1; i < cands.size(); ++i) {
        if (cands[i].value < cands[pick].value) pick = i;
      }
    }

    Candidate& chosen = cands[pick];
    best_seen = std::min(best_seen, chosen.value);
    state.tabu.add(chosen.swap_edge, now);
    if (cfg.evaluator == Evaluator::Cca) {
      state.weights.select(cg.skeleton_index(chosen.swap_edge));
    }
    result.swaps.push_back(chosen.swap_edge);
    cur = std::move(chosen.mapping_after);
    execute_ready();
  }
  return result;
}

std::size_t RoutingTrace::swap_count() const {
  std::size_t n = 0;
  for (const auto& s : layer_swaps) n += s.size();
  return n;
}

RoutingTrace route_circuit(
    const LayeredCircuit& lc, const Mapping& initial, const CouplingGraph& cg,
    const DistanceTable& dt, const RouterConfig& config) {
  if (!initial.is_total()) throw std::invalid_argument("initial mapping is not total");
  const RouterConfig cfg = resolve_defaults(config, cg);
  RouterState state(cg, cfg);
  RoutingTrace trace{initial, initial, {}, {}};
  for (std::size_t layer = 0; layer < lc.layers.size(); ++layer) {
    if (cfg.deadline && std::chrono::steady_clock::now() > *cfg.deadline) {
      throw TimeoutError("routing timed out at layer " + std::to_string(layer));
    }
    LayerResult r = tabu_search_layer(trace.final, layer, lc, cg, dt, cfg, state);
    trace.final = std::move(r.mapping);
    trace.layer_swaps.push_back(std::move(r.swaps));
    trace.layer_executed_after.push_back(std::move(r.executed_after));
  }
  return trace;
}

}  // namespace tsmap
