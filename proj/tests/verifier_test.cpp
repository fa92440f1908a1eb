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

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "tsmap/circuit.hpp"
#include "tsmap/pipeline.hpp"
#include "tsmap/verifier.hpp"

using namespace tsmap;

namespace {

QasmProgram program(int n, std::vector<Gate> gates) {
  QasmProgram p;
  p.num_qubits = n;
  p.gates = std::move(gates);
  for (std::size_t i = 0; i < p.gates.size(); ++i) p.gates[i].id = i;
  return p;
}

}  // namespace

TEST_CASE("parameter expressions") {
  CHECK(eval_param("pi") == doctest::Approx(std::numbers::pi));
  CHECK(eval_param("-3*pi/4") == doctest::Approx(-3 * std::numbers::pi / 4));
  CHECK(eval_param("(1+2)*0.5") == doctest::Approx(1.5));
  CHECK(eval_param("2^3") == doctest::Approx(8));
  CHECK(eval_param("1e-3 + cos(0)") == doctest::Approx(1.001));
  CHECK(eval_param(" - - 2 ") == doctest::Approx(2));
  CHECK_THROWS_AS(eval_param("pi pi"), SimulationError);
  CHECK_THROWS_AS(eval_param("foo"), SimulationError);
  CHECK_THROWS_AS(eval_param("(1"), SimulationError);
}

TEST_CASE("gate matrices are unitary") {
  const std::vector<std::pair<std::string, std::string>> gates = {
      {"id", ""}, {"h", ""}, {"x", ""}, {"y", ""}, {"z", ""}, {"s", ""}, {"sdg", ""},
      {"t", ""}, {"tdg", ""}, {"sx", ""}, {"sxdg", ""}, {"u1", "0.3"}, {"p", "pi/3"},
      {"rz", "1.2"}, {"rx", "-0.4"}, {"ry", "2"}, {"u2", "0.1,0.2"}, {"u3", "1,2,3"},
      {"U", "pi/2,0,pi"}};
  for (const auto& [name, params] : gates) {
    INFO(name);
    auto u = gate_matrix(name, params);
    // U U^dagger = I.
    Amplitude a = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
    Amplitude b = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
    Amplitude d = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
    CHECK(std::abs(a - 1.0) < 1e-12);
    CHECK(std::abs(b) < 1e-12);
    CHECK(std::abs(d - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(gate_matrix("frob", ""), SimulationError);
  CHECK_THROWS_AS(gate_matrix("rz", ""), SimulationError);
  // u2(0, pi) is the Hadamard.
  auto h = gate_matrix("h", "");
  auto u2 = gate_matrix("u2", "0,pi");
  for (int k = 0; k < 4; ++k) CHECK(std::abs(h[k] - u2[k]) < 1e-12);
}

TEST_CASE("Hadamard on |0>") {
  auto st = simulate_statevector(program(1, {Gate::h(0)}));
  CHECK(st[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(st[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("CNOT flips the target when the control is set") {
  auto st = simulate_statevector(program(2, {Gate::one_qubit("x", 0), Gate::cnot(0, 1)}));
  CHECK(std::abs(st[3] - 1.0) < 1e-12);
  CHECK(std::abs(st[1]) < 1e-12);
}

TEST_CASE("SWAP decomposition acts as SWAP on basis states") {
  for (int basis = 0; basis < 4; ++basis) {
    std::vector<Gate> prep;
    if (basis & 1) prep.push_back(Gate::one_qubit("x", 0));
    if (basis & 2) prep.push_back(Gate::one_qubit("x", 1));
    auto direct = prep;
    direct.push_back(Gate::swap(0, 1));
    auto cnots = prep;
    for (Gate g : {Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)}) cnots.push_back(g);
    auto one_way = prep;
    for (Gate g : {Gate::cnot(0, 1), Gate::h(0), Gate::h(1), Gate::cnot(0, 1), Gate::h(0),
                   Gate::h(1), Gate::cnot(0, 1)}) {
      one_way.push_back(g);
    }
    const int swapped = ((basis & 1) << 1) | ((basis & 2) >> 1);
    for (const auto& gates : {direct, cnots, one_way}) {
      auto st = simulate_statevector(program(2, gates));
      CHECK(std::abs(std::abs(st[static_cast<std::size_t>(swapped)]) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("simulation size limit and custom gates") {
  CHECK_THROWS_AS(simulate_statevector(program(11, {})), SimulationError);
  CustomGates custom{{"flip", Matrix2{0.0, 1.0, 1.0, 0.0}}};
  auto st = simulate_statevector(program(1, {Gate::one_qubit("flip", 0)}), 10, custom);
  CHECK(std::abs(st[1] - 1.0) < 1e-12);
}

TEST_CASE("structural check on routed circuits") {
  auto q20 = load_device("q20");
  DistanceTable dt(q20);
  auto rr = transform(testing::fig3_program(), q20, dt);
  CHECK(structural_check(rr.source, rr.output, rr, q20));
  CHECK(assert_equivalence(rr.source, rr.output, rr));

  SUBCASE("identity transform of an executable circuit") {
    auto p = program(3, {Gate::cnot(0, 1), Gate::h(2), Gate::cnot(1, 2)});
    auto id = transform(p, q20, dt);
    CHECK(id.stats.swaps == 0);
    CHECK(structural_check(id.source, id.output, id, q20));
  }
  SUBCASE("a deleted CNOT is reported") {
    auto bad = rr.output;
    for (std::size_t i = 0; i < bad.gates.size(); ++i) {
      bool in_segment = false;
      for (const auto& s : rr.segments) in_segment = in_segment || (i >= s.begin && i < s.end);
      if (!in_segment && bad.gates[i].kind == GateKind::CNOT) {
        bad.gates.erase(bad.gates.begin() + static_cast<long>(i));
        break;
      }
    }
    auto check = structural_check(rr.source, bad, rr, q20);
    CHECK_FALSE(check);
    CHECK_FALSE(check.message.empty());
  }
  SUBCASE("a CNOT off the coupling graph is reported") {
    auto bad = rr.output;
    bad.gates.push_back(Gate::cnot(0, 19));
    auto check = structural_check(rr.source, bad, rr, q20);
    CHECK_FALSE(check);
    REQUIRE(check.gate_index);
    CHECK(*check.gate_index == bad.gates.size() - 1);
  }
}

TEST_CASE("a missing final gate leaves the source unconsumed") {
  auto line = line_device(3);
  DistanceTable dt(line);
  auto p = program(2, {Gate::cnot(0, 1), Gate::h(0)});
  auto rr = transform(p, line, dt);
  auto bad = rr.output;
  bad.gates.pop_back();
  auto check = structural_check(rr.source, bad, rr, line);
  CHECK_FALSE(check);
  CHECK(check.message.find("never executed") != std::string::npos);
}

TEST_CASE("reordering gates on a qubit is reported") {
  auto line = line_device(2);
  DistanceTable dt(line);
  auto p = program(2, {Gate::h(0), Gate::one_qubit("t", 0)});
  auto rr = transform(p, line, dt);
  auto bad = rr.output;
  std::swap(bad.gates[0], bad.gates[1]);
  CHECK_FALSE(structural_check(rr.source, bad, rr, line));
  CHECK_FALSE(assert_equivalence(rr.source, bad, rr));
}

TEST_CASE("equivalence of a two-qubit circuit routed with one swap") {
  auto line = line_device(3);
  DistanceTable dt(line);
  // Three qubits all interacting force a swap on a line.
  auto p = program(3, {Gate::h(0), Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(0, 2),
                       Gate::one_qubit("rz", 2, "pi/3")});
  auto rr = transform(p, line, dt);
  REQUIRE(rr.stats.swaps >= 1);
  auto ok = assert_equivalence(rr.source, rr.output, rr);
  CHECK(ok);
  CHECK(ok.deviation < 1e-9);

  auto wrong = rr;
  // Claim the qubits ended where they started.
  wrong.final_mapping = wrong.initial_mapping;
  CHECK_FALSE(assert_equivalence(rr.source, rr.output, wrong));
}

TEST_CASE("equivalence refuses wide sources") {
  auto q20 = load_device("q20");
  DistanceTable dt(q20);
  auto p = program(12, {Gate::cnot(0, 11)});
  auto rr = transform(p, q20, dt);
  CHECK_FALSE(assert_equivalence(rr.source, rr.output, rr));
}

TEST_CASE("structural pass implies semantic pass") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> devices = {"q20", "qx5", "qx2", "qx4"};
  for (int trial = 0; trial < 40; ++trial) {
    auto cg = load_device(devices[static_cast<std::size_t>(trial) % devices.size()]);
    DistanceTable dt(cg);
    const int n = std::min(cg.size(), 3 + trial % 8);
    auto p = testing::random_program(rng, n, 15 + trial);
    auto rr = transform(p, cg, dt);
    REQUIRE(structural_check(rr.source, rr.output, rr, cg));
    CHECK(assert_equivalence(rr.source, rr.output, rr, static_cast<std::uint64_t>(trial)));

    // Perturb by swapping two neighbouring output gates; whenever the
    // structural check still accepts, the states must agree.
    for (int k = 0; k < 5 && rr.output.gates.size() > 1; ++k) {
      auto bad = rr.output;
      std::size_t i = rng() % (bad.gates.size() - 1);
      std::swap(bad.gates[i], bad.gates[i + 1]);
      if (structural_check(rr.source, bad, rr, cg)) {
        CHECK(assert_equivalence(rr.source, bad, rr));
      }
    }
  }
}
