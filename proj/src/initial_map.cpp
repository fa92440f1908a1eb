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

#include "tsmap/initial_map.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace tsmap {

InteractionGraph attach_isolated(const InteractionGraph& ig) {
  InteractionGraph out = ig;
  const int n = ig.size();
  if (n == 0) return out;
  int hub = 0;
  for (int v = 1; v < n; ++v) {
    if (ig.degree(v) > ig.degree(hub)) hub = v;
  }
  for (int v : ig.isolated()) {
    if (v != hub) out.add_artificial(v, hub);
  }
  return out;
}

namespace {

std::vector<int> neighbor_degree_profile(const std::vector<int>& nbrs, auto degree_of) {
  std::vector<int> profile;
  profile.reserve(nbrs.size());
  for (int w : nbrs) profile.push_back(degree_of(w));
  std::sort(profile.rbegin(), profile.rend());
  return profile;
}

class Matcher {
 public:
  Matcher(const InteractionGraph& ig, const CouplingGraph& cg, const MatchOptions& opts)
      : ig_(ig), cg_(cg), opts_(opts), n_(ig.size()),
        image_(static_cast<std::size_t>(n_), kUnmapped),
        used_(static_cast<std::size_t>(cg.size()), false) {
    filter_candidates();
    build_order();
  }

  std::vector<Mapping> run() {
    search(0);
    return std::move(results_);
  }

 private:
  void filter_candidates() {
    candidates_.resize(static_cast<std::size_t>(n_));
    in_candidates_.assign(static_cast<std::size_t>(n_),
                          std::vector<char>(static_cast<std::size_t>(cg_.size()), 0));
    for (int u = 0; u < n_; ++u) {
      auto want = neighbor_degree_profile(ig_.neighbors(u), [&](int w) { return ig_.degree(w); });
      auto& cand = candidates_[static_cast<std::size_t>(u)];
      for (int v = 0; v < cg_.size(); ++v) {
        if (cg_.degree(v) < ig_.degree(u)) continue;
        auto have =
            neighbor_degree_profile(cg_.neighbors(v), [&](int w) { return cg_.degree(w); });
        bool dominated = true;
        for (std::size_t k = 0; k < want.size(); ++k) {
          if (want[k] > have[k]) {
            dominated = false;
            break;
          }
        }
        if (dominated) cand.push_back(v);
      }
      // Nothing survives for vertices too dense for the device; let them
      // try anywhere so partial embeddings can still place them.
      if (cand.empty()) {
        cand.resize(static_cast<std::size_t>(cg_.size()));
        std::iota(cand.begin(), cand.end(), 0);
      }
      for (int v : cand) in_candidates_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    }
  }

  // Descending degree, then fewer candidates, then lower index.
  bool better(int a, int b) const {
    if (ig_.degree(a) != ig_.degree(b)) return ig_.degree(a) > ig_.degree(b);
    auto ca = candidates_[static_cast<std::size_t>(a)].size();
    auto cb = candidates_[static_cast<std::size_t>(b)].size();
    if (ca != cb) return ca < cb;
    return a < b;
  }

  void build_order() {
    std::vector<char> ordered(static_cast<std::size_t>(n_), 0);
    std::vector<char> frontier(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      bool pick_frontier = false;
      for (int u = 0; u < n_; ++u) {
        if (ordered[static_cast<std::size_t>(u)]) continue;
        bool f = frontier[static_cast<std::size_t>(u)] != 0;
        if (pick < 0 || (f && !pick_frontier) || (f == pick_frontier && better(u, pick))) {
          pick = u;
          pick_frontier = f;
        }
      }
      ordered[static_cast<std::size_t>(pick)] = 1;
      order_.push_back(pick);
      for (int w : ig_.neighbors(pick)) frontier[static_cast<std::size_t>(w)] = 1;
    }
  }

  bool consistent(int u, int v) const {
    for (int w : ig_.neighbors(u)) {
      int img = image_[static_cast<std::size_t>(w)];
      if (img != kUnmapped && !cg_.adjacent(v, img)) return false;
    }
    return true;
  }

  void record() {
    const int count = mapped_;
    if (count > best_) {
      best_ = count;
      results_.clear();
    }
    if (count == best_ && results_.size() < opts_.limit) {
      results_.push_back(Mapping::from_vector(image_, cg_.size()));
    }
    if (best_ == n_ && results_.size() >= opts_.limit) stop_ = true;
  }

  void search(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      record();
      return;
    }
    // Branch cannot reach the best mapped count any more.
    if (mapped_ + static_cast<int>(order_.size() - depth) < best_) return;
    const int u = order_[depth];
    const auto uu = static_cast<std::size_t>(u);

    // Local candidates come from the neighbourhood of one matched neighbour
    // when there is one.
    int anchor = kUnmapped;
    for (int w : ig_.neighbors(u)) {
      if (image_[static_cast<std::size_t>(w)] != kUnmapped) {
        anchor = image_[static_cast<std::size_t>(w)];
        break;
      }
    }
    const std::vector<int>& pool =
        anchor == kUnmapped ? candidates_[uu] : cg_.neighbors(anchor);

    bool placed = false;
    for (int v : pool) {
      const auto vv = static_cast<std::size_t>(v);
      if (used_[vv] || !in_candidates_[uu][vv] || !consistent(u, v)) continue;
      if (++nodes_ > opts_.node_budget) {
        stop_ = true;
        return;
      }
      placed = true;
      image_[uu] = v;
      used_[vv] = true;
      ++mapped_;
      search(depth + 1);
      --mapped_;
      used_[vv] = false;
      image_[uu] = kUnmapped;
      if (stop_) return;
    }
    if (!placed) search(depth + 1);
  }

  const InteractionGraph& ig_;
  const CouplingGraph& cg_;
  const MatchOptions& opts_;
  int n_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<char>> in_candidates_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Mapping> results_;
  int mapped_ = 0;
  int best_ = -1;
  std::size_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

std::vector<Mapping> find_partial_mappings(
    const InteractionGraph& ig, const CouplingGraph& cg, const MatchOptions& opts) {
  if (ig.size() == 0) return {Mapping(0, cg.size())};
  return Matcher(ig, cg, opts).run();
}

Mapping complete_mapping(Mapping partial, const InteractionGraph& ig, const CouplingGraph& cg) {
  if (ig.size() > cg.size()) {
    throw DeviceError(
        "device too small: " + std::to_string(ig.size()) + " logical qubits, " +
        std::to_string(cg.size()) + " physical");
  }
  if (partial.num_logical() != ig.size() || partial.num_physical() != cg.size()) {
    throw std::invalid_argument("mapping shape does not match the graphs");
  }
  std::deque<int> queue;
  for (int q = 0; q < ig.size(); ++q) {
    if (partial.physical(q) == kUnmapped) queue.push_back(q);
  }
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();

    std::vector<int> order;
    for (int c = 0; c < ig.size(); ++c) {
      if (partial.physical(c) != kUnmapped) order.push_back(c);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (ig.weight(q, a) != ig.weight(q, b)) return ig.weight(q, a) > ig.weight(q, b);
      if (ig.degree(a) != ig.degree(b)) return ig.degree(a) > ig.degree(b);
      return a > b;
    });

    int chosen = kUnmapped;
    for (int c : order) {
      for (int k : cg.neighbors(partial.physical(c))) {
        if (partial.is_free(k)) {
          chosen = k;
          break;
        }
      }
      if (chosen != kUnmapped) break;
    }
    if (chosen == kUnmapped) {
      int start = 0;
      if (!order.empty()) {
        start = partial.physical(order.front());
      } else {
        for (int v = 1; v < cg.size(); ++v) {
          if (cg.degree(v) > cg.degree(start)) start = v;
        }
      }
      std::vector<char> seen(static_cast<std::size_t>(cg.size()), 0);
      std::deque<int> bfs{start};
      seen[static_cast<std::size_t>(start)] = 1;
      while (!bfs.empty() && chosen == kUnmapped) {
        int at = bfs.front();
        bfs.pop_front();
        if (partial.is_free(at)) {
          chosen = at;
          break;
        }
        for (int k : cg.neighbors(at)) {
          if (!seen[static_cast<std::size_t>(k)]) {
            seen[static_cast<std::size_t>(k)] = 1;
            bfs.push_back(k);
          }
        }
      }
      if (chosen == kUnmapped) throw DeviceError("no free physical qubit reachable");
    }
    partial.assign(q, chosen);
  }
  return partial;
}

long mapping_score(const Mapping& m, const InteractionGraph& ig, const DistanceTable& dt) {
  long score = 0;
  for (int a = 0; a < ig.size(); ++a) {
    for (int b : ig.neighbors(a)) {
      if (b <= a) continue;
      score += static_cast<long>(ig.weight(a, b)) * dt.dist(m.physical(a), m.physical(b));
    }
  }
  return score;
}

Mapping select_initial(
    const std::vector<Mapping>& candidates, const InteractionGraph& ig,
    const CouplingGraph& cg, const DistanceTable& dt) {
  if (candidates.empty()) throw std::invalid_argument("no candidate mappings");
  int most = 0;
  for (const auto& m : candidates) most = std::max(most, m.mapped_count());
  Mapping best;
  long best_score = std::numeric_limits<long>::max();
  for (const auto& m : candidates) {
    if (m.mapped_count() != most) continue;
    Mapping full = complete_mapping(m, ig, cg);
    long s = mapping_score(full, ig, dt);
    if (s < best_score) {
      best_score = s;
      best = std::move(full);
    }
  }
  return best;
}

Mapping initial_mapping(
    const InteractionGraph& ig, const CouplingGraph& cg, const DistanceTable& dt,
    const MatchOptions& opts) {
  if (ig.size() > cg.size()) {
    throw DeviceError(
        "device too small: " + std::to_string(ig.size()) + " logical qubits, " +
        std::to_string(cg.size()) + " physical");
  }
  InteractionGraph linked = attach_isolated(ig);
  return select_initial(find_partial_mappings(linked, cg, opts), linked, cg, dt);
}

}  // namespace tsmap
