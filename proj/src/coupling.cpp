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

#include "tsmap/coupling.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace tsmap {

CouplingGraph::CouplingGraph(std::string name, int num_qubits, std::vector<Edge> directed_edges)
    : name_(std::move(name)),
      n_(num_qubits),
      directed_(static_cast<std::size_t>(num_qubits) * static_cast<std::size_t>(num_qubits), 0),
      skeleton_id_(static_cast<std::size_t>(num_qubits) * static_cast<std::size_t>(num_qubits), -1),
      neighbors_(static_cast<std::size_t>(num_qubits)) {
  if (n_ <= 0) throw DeviceError("device '" + name_ + "' has no qubits");
  for (const Edge& e : directed_edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n_ || e.b >= n_) {
      throw DeviceError(
          "edge " + std::to_string(e.a) + "->" + std::to_string(e.b) + " out of range");
    }
    if (e.a == e.b) throw DeviceError("self-loop on qubit " + std::to_string(e.a));
    if (has_directed(e.a, e.b)) continue;
    directed_[idx(e.a, e.b)] = 1;
    edges_.push_back(e);
  }
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) continue;
      if (!has_directed(u, v) || !has_directed(v, u)) bilateral_ = false;
      skeleton_id_[idx(u, v)] = skeleton_id_[idx(v, u)] = static_cast<int>(skeleton_.size());
      skeleton_.push_back({u, v});
      neighbors_[static_cast<std::size_t>(u)].push_back(v);
      neighbors_[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

int CouplingGraph::skeleton_index(Edge e) const {
  if (e.a < 0 || e.b < 0 || e.a >= n_ || e.b >= n_) return -1;
  return skeleton_id_[idx(e.a, e.b)];
}

namespace {

std::vector<Edge> q20_edges() {
  std::vector<Edge> undirected;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 5; ++c) {
      int id = 5 * r + c;
      if (c < 4) undirected.push_back({id, id + 1});
      if (r < 3) undirected.push_back({id, id + 5});
    }
  }
  const std::vector<Edge> crossings = {{1, 7},  {2, 6},   {3, 9},   {4, 8},
                                       {5, 11}, {6, 10},  {7, 13},  {8, 12},
                                       {11, 17}, {12, 16}, {13, 19}, {14, 18}};
  undirected.insert(undirected.end(), crossings.begin(), crossings.end());
  std::vector<Edge> out;
  for (const Edge& e : undirected) {
    out.push_back(e);
    out.push_back({e.b, e.a});
  }
  return out;
}

}  // namespace

std::vector<std::string> builtin_devices() { return {"qx2", "qx3", "qx4", "qx5", "q20"}; }

CouplingGraph load_device(std::string_view name_or_path) {
  std::string name(name_or_path);
  if (name == "qx2") {
    return CouplingGraph("qx2", 5, {{0, 1}, {0, 2}, {1, 2}, {3, 2}, {4, 3}, {4, 2}});
  }
  if (name == "qx4") {
    return CouplingGraph("qx4", 5, {{1, 0}, {2, 0}, {2, 1}, {2, 3}, {4, 3}, {4, 2}});
  }
  if (name == "qx3") {
    return CouplingGraph(
        "qx3", 16,
        {{0, 1},   {1, 2},   {2, 3},   {3, 14},  {4, 3},   {4, 5},  {6, 7},
         {6, 11},  {7, 10},  {8, 7},   {9, 8},   {9, 10},  {11, 10}, {12, 5},
         {12, 11}, {12, 13}, {13, 4},  {13, 14}, {15, 0},  {15, 14}});
  }
  if (name == "qx5") {
    return CouplingGraph(
        "qx5", 16,
        {{1, 0},  {1, 2},   {2, 3},   {3, 4},   {3, 14},  {5, 4},   {6, 5},  {6, 7},
         {6, 11}, {7, 10},  {8, 7},   {9, 8},   {9, 10},  {11, 10}, {12, 5}, {12, 11},
         {12, 13}, {13, 4}, {13, 14}, {15, 0},  {15, 2},  {15, 14}});
  }
  if (name == "q20") return CouplingGraph("q20", 20, q20_edges());

  std::ifstream in(name, std::ios::binary);
  if (!in) throw DeviceError("unknown device '" + name + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_device(ss.str(), std::filesystem::path(name).stem().string());
}

CouplingGraph parse_device(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool bilateral = false;
  bool seen_header = false;
  int declared = -1;
  int max_index = -1;
  std::vector<Edge> edges;
  auto bad = [&](const std::string& why) {
    return DeviceError("device file line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "bilateral:") {
      std::string v;
      ls >> v;
      if (v != "true" && v != "false") throw bad("expected true or false");
      bilateral = v == "true";
      seen_header = true;
      continue;
    }
    if (first == "qubits:") {
      if (!(ls >> declared) || declared <= 0) throw bad("bad qubit count");
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw bad("bad vertex '" + first + "'");
    } catch (const std::logic_error&) {
      throw bad("bad vertex '" + first + "'");
    }
    std::string rest;
    if (!(ls >> v) || u < 0 || v < 0 || (ls >> rest)) throw bad("expected 'u v'");
    edges.push_back({u, v});
    if (bilateral) edges.push_back({v, u});
    max_index = std::max({max_index, u, v});
  }
  if (!seen_header) throw DeviceError("device file lacks 'bilateral:' header");
  if (edges.empty()) throw DeviceError("device file lists no edges");
  int n = declared > 0 ? declared : max_index + 1;
  if (max_index >= n) throw DeviceError("edge index exceeds declared qubit count");
  return CouplingGraph(std::move(name), n, std::move(edges));
}

CouplingGraph line_device(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({i + 1, i});
  }
  return CouplingGraph("line" + std::to_string(n), n, std::move(edges));
}

DistanceTable::DistanceTable(const CouplingGraph& cg)
    : n_(cg.size()), paths_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
  const auto n = static_cast<std::size_t>(n_);
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  dist_.assign(n * n, inf);
  neighbors_.resize(n);
  for (int u = 0; u < n_; ++u) {
    neighbors_[static_cast<std::size_t>(u)] = cg.neighbors(u);
    dist_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(u)] = 0;
    for (int v : cg.neighbors(u)) {
      dist_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    }
  }
  // Floyd-Warshall on unit weights.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      int dik = dist_[i * n + k];
      if (dik >= inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        int through = dik + dist_[k * n + j];
        if (through < dist_[i * n + j]) dist_[i * n + j] = through;
      }
    }
  }
  if (std::any_of(dist_.begin(), dist_.end(), [](int d) { return d >= inf; })) {
    std::vector<int> comp(n, -1);
    std::string desc;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      desc += " {";
      bool first = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist_[s * n + v] < inf) {
          comp[v] = static_cast<int>(s);
          desc += (first ? "" : ", ") + std::to_string(v);
          first = false;
        }
      }
      desc += "}";
    }
    throw DeviceError("device '" + cg.name() + "' is disconnected; components:" + desc);
  }
}

const std::vector<Path>& DistanceTable::paths(int i, int j) const {
  const std::size_t slot = static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                           static_cast<std::size_t>(j);
  std::lock_guard<std::mutex> lock(mutex_);
  if (paths_[slot]) return *paths_[slot];

  auto out = std::make_unique<std::vector<Path>>();
  Path current{i};
  // Depth-first; neighbours visited in ascending order.
  auto extend = [&](auto&& self, int at) -> void {
    if (at == j) {
      out->push_back(current);
      return;
    }
    for (int k : neighbors_[static_cast<std::size_t>(at)]) {
      if (dist(k, j) == dist(at, j) - 1) {
        current.push_back(k);
        self(self, k);
        current.pop_back();
      }
    }
  };
  extend(extend, i);
  paths_[slot] = std::move(out);
  return *paths_[slot];
}

bool is_executable(const Gate& g, const Mapping& m, const CouplingGraph& cg) {
  if (!g.is_two_qubit()) return true;
  int c = m.physical(g.q0);
  int t = m.physical(g.q1);
  if (c == kUnmapped || t == kUnmapped) {
    throw std::invalid_argument("gate operand is not mapped");
  }
  return cg.has_directed(c, t);
}

bool is_adjacent_under(const Gate& g, const Mapping& m, const CouplingGraph& cg) {
  if (!g.is_two_qubit()) return true;
  int c = m.physical(g.q0);
  int t = m.physical(g.q1);
  if (c == kUnmapped || t == kUnmapped) {
    throw std::invalid_argument("gate operand is not mapped");
  }
  return cg.adjacent(c, t);
}

int path_cost(const Path& path, const CouplingGraph& cg, const Gate& g, const Mapping& m) {
  if (path.size() < 2 || path.front() != m.physical(g.q0) ||
      path.back() != m.physical(g.q1)) {
    throw std::invalid_argument("path endpoints do not match the gate's mapped operands");
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!cg.adjacent(path[k], path[k + 1])) {
      throw std::invalid_argument("path uses a non-edge");
    }
  }
  int cost = 0;
  // The control walks path[0] .. path[size-2]; the last hop stays a CNOT.
  for (std::size_t k = 0; k + 2 < path.size(); ++k) {
    bool two_way = cg.has_directed(path[k], path[k + 1]) && cg.has_directed(path[k + 1], path[k]);
    cost += two_way ? 3 : 7;
  }
  const int control = path[path.size() - 2];
  if (!cg.has_directed(control, path.back())) cost += 4;
  return cost;
}

}  // namespace tsmap
