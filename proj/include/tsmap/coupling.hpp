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

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsmap/mapping.hpp"
#include "tsmap/qasm.hpp"

namespace tsmap {

/// Physical qubit pair. For directed use `a` is the control side.
struct Edge {
  int a = -1;
  int b = -1;

  [[nodiscard]] Edge normalized() const { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

class DeviceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Directed coupling graph of a device. CNOTs may only run along directed
 * edges; routing works on the undirected skeleton.
 */
class CouplingGraph {
 public:
  CouplingGraph(std::string name, int num_qubits, std::vector<Edge> directed_edges);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] bool bilateral() const { return bilateral_; }

  [[nodiscard]] bool has_directed(int from, int to) const {
    return directed_[idx(from, to)] != 0;
  }
  [[nodiscard]] bool adjacent(int u, int v) const {
    return has_directed(u, v) || has_directed(v, u);
  }
  /// Skeleton neighbours in ascending order.
  [[nodiscard]] const std::vector<int>& neighbors(int u) const {
    return neighbors_[static_cast<std::size_t>(u)];
  }
  [[nodiscard]] int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

  [[nodiscard]] const std::vector<Edge>& directed_edges() const { return edges_; }
  /// Undirected edges with a < b, sorted.
  [[nodiscard]] const std::vector<Edge>& skeleton_edges() const { return skeleton_; }
  [[nodiscard]] int skeleton_index(Edge e) const;

 private:
  [[nodiscard]] std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  std::string name_;
  int n_;
  bool bilateral_ = true;
  std::vector<Edge> edges_;
  std::vector<Edge> skeleton_;
  std::vector<char> directed_;
  std::vector<int> skeleton_id_;
  std::vector<std::vector<int>> neighbors_;
};

std::vector<std::string> builtin_devices();

/// Built-in device by name (qx2, qx3, qx4, qx5, q20) or a device file path.
CouplingGraph load_device(std::string_view name_or_path);

/**
 * Parses a device description:
 *
 *   bilateral: true|false
 *   qubits: N          (optional; defaults to the largest index + 1)
 *   u v                (one directed edge per line)
 *
 * Lines starting with '#' are comments. With `bilateral: true` every listed
 * edge is also added in the reverse direction.
 */
CouplingGraph parse_device(std::string_view text, std::string name);

/// Path device 0 - 1 - ... - (n-1) with bilateral edges.
CouplingGraph line_device(int n);

using Path = std::vector<int>;

/**
 * Hop distances on the undirected skeleton plus every shortest path between
 * each ordered pair. Paths are enumerated on first request and cached; the
 * table can be shared between threads.
 */
class DistanceTable {
 public:
  explicit DistanceTable(const CouplingGraph& cg);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int dist(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }
  /// All shortest paths from i to j, each listed as a vertex sequence.
  [[nodiscard]] const std::vector<Path>& paths(int i, int j) const;

 private:
  int n_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> dist_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<const std::vector<Path>>> paths_;
};

/// True iff the CNOT runs along a directed device edge under the mapping.
bool is_executable(const Gate& g, const Mapping& m, const CouplingGraph& cg);

/// Direction-agnostic variant: operands sit on skeleton-adjacent qubits.
bool is_adjacent_under(const Gate& g, const Mapping& m, const CouplingGraph& cg);

/**
 * Elementary gates needed to run `g` by moving its control along `path`
 * until it sits next to the target. Each SWAP costs 3 CNOTs, plus 4 H on a
 * one-way edge; a final edge that points target->control adds 4 H.
 */
int path_cost(const Path& path, const CouplingGraph& cg, const Gate& g, const Mapping& m);

}  // namespace tsmap
