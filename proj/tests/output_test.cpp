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

#include <doctest.h>

#include <array>
#include <complex>
#include <random>

#include "support.hpp"
#include "tsmap/circuit.hpp"
#include "tsmap/output.hpp"
#include "tsmap/pipeline.hpp"

using namespace tsmap;

namespace {

using C = std::complex<double>;
using M4 = std::array<std::array<C, 4>, 4>;

// Basis index = 2 * bit(qubit 1) + bit(qubit 0).
M4 identity() {
  M4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

M4 mul(const M4& a, const M4& b) {
  M4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

M4 cnot_matrix(int control) {
  M4 m{};
  for (int x = 0; x < 4; ++x) {
    int c = (x >> control) & 1;
    int y = c ? x ^ (1 << (1 - control)) : x;
    m[y][x] = 1;
  }
  return m;
}

M4 h_matrix(int q) {
  const double r = 1 / std::sqrt(2.0);
  M4 m{};
  for (int x = 0; x < 4; ++x) {
    int b = (x >> q) & 1;
    m[x & ~(1 << q)][x] += r;
    m[x | (1 << q)][x] += b ? -r : r;
  }
  return m;
}

// Product of the gates on physical qubits {a, b}, a as qubit 0.
M4 unitary(const std::vector<Gate>& gates, int a) {
  M4 u = identity();
  for (const Gate& g : gates) {
    M4 step = g.kind == GateKind::CNOT ? cnot_matrix(g.q0 == a ? 0 : 1) : h_matrix(g.q0 == a ? 0 : 1);
    u = mul(step, u);
  }
  return u;
}

bool close(const M4& a, const M4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
  return true;
}

M4 swap_matrix() {
  M4 m{};
  m[0][0] = m[3][3] = 1;
  m[1][2] = m[2][1] = 1;
  return m;
}

}  // namespace

TEST_CASE("swap decomposition sizes") {
  auto q20 = load_device("q20");
  auto qx5 = load_device("qx5");
  CHECK(decompose_swap(Edge{6, 7}, q20).size() == 3);
  auto one_way = decompose_swap(Edge{4, 13}, qx5);
  REQUIRE(one_way.size() == 7);
  for (const Gate& g : one_way) {
    if (g.kind == GateKind::CNOT) CHECK(qx5.has_directed(g.q0, g.q1));
  }
  CHECK_THROWS(decompose_swap(Edge{0, 2}, q20));
}

TEST_CASE("swap decompositions equal the SWAP unitary") {
  auto q20 = load_device("q20");
  auto qx5 = load_device("qx5");
  CHECK(close(unitary(decompose_swap(Edge{6, 7}, q20), 6), swap_matrix()));
  CHECK(close(unitary(decompose_swap(Edge{4, 13}, qx5), 4), swap_matrix()));
  CHECK(close(unitary(decompose_swap(Edge{13, 4}, qx5), 4), swap_matrix()));
}

TEST_CASE("direction fixing") {
  auto qx5 = load_device("qx5");
  auto m = Mapping::from_vector({13, 4}, 16);
  CHECK(fix_direction(Gate::cnot(0, 1), m, qx5).size() == 1);
  auto rev = fix_direction(Gate::cnot(1, 0), m, qx5);
  REQUIRE(rev.size() == 5);
  int hs = 0;
  for (const Gate& g : rev) hs += g.kind == GateKind::H;
  CHECK(hs == 4);
  // H H CX(13,4) H H equals CX(4,13).
  CHECK(close(unitary(rev, 4), cnot_matrix(0)));

  auto q20 = load_device("q20");
  auto p = Mapping::from_vector({7, 6}, 20);
  CHECK(fix_direction(Gate::cnot(0, 1), p, q20).size() == 1);
  CHECK(fix_direction(Gate::cnot(1, 0), p, q20).size() == 1);
  auto apart = Mapping::from_vector({0, 19}, 20);
  CHECK_THROWS(fix_direction(Gate::cnot(0, 1), apart, q20));
}

TEST_CASE("adjacent repeated swaps cancel") {
  std::vector<Edge> s = {{1, 2}, {3, 4}, {4, 3}, {2, 1}, {5, 6}};
  CHECK(cancel_adjacent_swaps(s) == std::vector<Edge>{{5, 6}});
  CHECK(cancel_adjacent_swaps({{1, 2}, {2, 3}, {1, 2}}).size() == 3);
}

TEST_CASE("zero-swap assembly keeps the gate count") {
  QasmProgram p;
  p.num_qubits = 3;
  p.cregs = {"c[3]"};
  p.gates = {Gate::h(0, 0), Gate::cnot(0, 1, 1), Gate::one_qubit("t", 1, "", 2),
             Gate::cnot(1, 2, 3)};
  p.measurements = {{2, "c[0]"}};
  auto q20 = load_device("q20");
  auto lc = compact_lifetime(layer_asap(p));
  auto init = Mapping::from_vector({5, 6, 7}, 20);
  RoutingTrace trace{init, init, {{}, {}}, {{0}, {0}}};
  auto rr = assemble_output(trace, lc, p, q20);
  CHECK(rr.output.gates.size() == p.gates.size());
  CHECK(rr.stats.added_gates == 0);
  CHECK(rr.stats.swaps == 0);
  CHECK(rr.output.num_qubits == 20);
  CHECK(rr.output.gates[0].same_op(Gate::h(5)));
  CHECK(rr.output.gates[2].same_op(Gate::one_qubit("t", 6)));
  CHECK(rr.output.measurements[0].qubit == 7);
}

TEST_CASE("one swap on Q20 adds three gates") {
  QasmProgram p;
  p.num_qubits = 2;
  p.gates = {Gate::cnot(0, 1, 0)};
  auto q20 = load_device("q20");
  auto lc = layer_asap(p);
  auto init = Mapping::from_vector({0, 2}, 20);
  auto fin = init;
  fin.swap_physical(1, 2);
  RoutingTrace trace{init, fin, {{Edge{2, 1}}}, {{1}}};
  auto rr = assemble_output(trace, lc, p, q20);
  CHECK(rr.stats.added_gates == 3);
  CHECK(rr.stats.added_cnots == 3);
  CHECK(rr.stats.swaps == 1);
  REQUIRE(rr.segments.size() == 1);
  CHECK(rr.segments[0].kind == SegmentKind::Swap);
  CHECK(rr.segments[0].begin == 0);
  CHECK(rr.segments[0].end == 3);
  CHECK(rr.output.gates[3].same_op(Gate::cnot(0, 1)));
}

TEST_CASE("gates execute before later swaps of their layer") {
  // Gate 0 is adjacent at once; gate 1 needs a swap that separates gate 0's
  // qubits again.
  QasmProgram p;
  p.num_qubits = 4;
  p.gates = {Gate::cnot(0, 1, 0), Gate::cnot(2, 3, 1)};
  auto line = line_device(5);
  auto lc = layer_asap(p);
  auto init = Mapping::from_vector({0, 1, 2, 4}, 5);
  auto fin = init;
  fin.swap_physical(2, 3);
  RoutingTrace trace{init, fin, {{Edge{2, 3}}}, {{0, 1}}};
  auto rr = assemble_output(trace, lc, p, line);
  REQUIRE(rr.output.gates.size() == 5);
  CHECK(rr.output.gates[0].same_op(Gate::cnot(0, 1)));
  CHECK(rr.output.gates[4].same_op(Gate::cnot(3, 4)));
}

TEST_CASE("swaps cancel only when no gate runs between them") {
  QasmProgram p;
  p.num_qubits = 2;
  p.gates = {Gate::cnot(0, 1, 0)};
  auto line = line_device(3);
  auto lc = layer_asap(p);
  auto init = Mapping::from_vector({0, 1}, 3);
  RoutingTrace undone{init, init, {{Edge{1, 2}, Edge{2, 1}}}, {{0}}};
  auto a = assemble_output(undone, lc, p, line);
  CHECK(a.stats.swaps == 0);
  auto apart = Mapping::from_vector({0, 2}, 3);
  RoutingTrace kept{apart, apart, {{Edge{1, 2}, Edge{2, 1}}}, {{1}}};
  auto b = assemble_output(kept, lc, p, line);
  CHECK(b.stats.swaps == 2);
  CHECK(b.output.gates[3].same_op(Gate::cnot(0, 1)));
}

TEST_CASE("added gates are three per swap on Q20") {
  std::mt19937_64 rng(13);
  auto q20 = load_device("q20");
  DistanceTable dt(q20);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = testing::random_program(rng, 4 + trial % 12, 40);
    auto rr = transform(p, q20, dt);
    CHECK(rr.stats.direction_fixes == 0);
    CHECK(rr.stats.added_gates == 3 * rr.stats.swaps);
    CHECK(rr.stats.depth_out == circuit_depth(rr.output));
    CHECK(rr.stats.gates_out == rr.output.gates.size());
    if (rr.stats.added_gates > 0) CHECK(rr.stats.depth_out >= rr.stats.depth_in);
    for (const Gate& g : rr.output.gates) {
      if (g.kind == GateKind::CNOT) CHECK(q20.has_directed(g.q0, g.q1));
    }
  }
}

TEST_CASE("directed devices count swaps and fixes separately") {
  std::mt19937_64 rng(14);
  auto qx5 = load_device("qx5");
  DistanceTable dt(qx5);
  for (int trial = 0; trial < 15; ++trial) {
    auto p = testing::random_program(rng, 5 + trial % 8, 30);
    auto rr = transform(p, qx5, dt);
    CHECK(rr.stats.added_gates == 7 * rr.stats.swaps + 4 * rr.stats.direction_fixes);
    CHECK(rr.stats.added_cnots == 3 * rr.stats.swaps);
    CHECK(rr.stats.added_h == 4 * rr.stats.swaps + 4 * rr.stats.direction_fixes);
    for (const Gate& g : rr.output.gates) {
      if (g.kind == GateKind::CNOT) CHECK(qx5.has_directed(g.q0, g.q1));
    }
  }
}
