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

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "tsmap/bench.hpp"

using namespace tsmap;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tsmap");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("tsmap_bench_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Drops the timing column so runs can be compared.
std::string without_ms(const std::string& row) {
  auto parts = std::vector<std::string>{};
  std::stringstream ss(row);
  for (std::string f; std::getline(ss, f, ',');) parts.push_back(f);
  parts.erase(parts.begin() + 7);
  std::string out;
  for (auto& p : parts) out += p + ",";
  return out;
}

}  // namespace

TEST_CASE("scale buckets") {
  CHECK(scale_of(100) == "small");
  CHECK(scale_of(101) == "medium");
  CHECK(scale_of(1000) == "medium");
  CHECK(scale_of(1001) == "large");
}

TEST_CASE("single circuit report with default parameters") {
  auto dir = scratch("single");
  write(dir / "fig3.qasm", testing::fig3_text());
  auto r = run({"--device", "q20", "--eval", "num", (dir / "fig3.qasm").string()});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["device"] == "q20");
  CHECK(j["evaluator"] == "num");
  CHECK(j["delta"] == 0.5);
  CHECK(j["lookahead"] == 2);
  CHECK(j["tenure"] == 5);
  CHECK(j["verified"] == true);
  CHECK(j["scale"] == "small");
  for (const char* key : {"added_gates", "swaps", "depth_in", "depth_out", "wall_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(fs::exists(dir / "fig3.routed.qasm"));
  auto saved = nlohmann::json::parse(std::ifstream(dir / "fig3.report.json"));
  CHECK(saved["added_gates"] == j["added_gates"]);
  auto routed = read_qasm_file((dir / "fig3.routed.qasm").string());
  CHECK(routed.num_qubits == 20);
}

TEST_CASE("CCA parameters come from the flags") {
  auto dir = scratch("cca");
  write(dir / "fig3.qasm", testing::fig3_text());
  auto r = run({"--eval", "cca", "--rho", "0.25", "--threshold", "40", "--out",
                (dir / "out").string(), (dir / "fig3.qasm").string()});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["evaluator"] == "cca");
  CHECK(j["rho"] == 0.25);
  CHECK(j["threshold"] == 40.0);
  CHECK(fs::exists(dir / "out" / "fig3.routed.qasm"));
  CHECK_FALSE(fs::exists(dir / "fig3.routed.qasm"));
}

TEST_CASE("directory run writes one row per circuit and a total") {
  auto dir = scratch("dir");
  write(dir / "a.qasm", testing::fig3_text());
  write(dir / "b.qasm", "OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[3];\ncx q[1],q[2];\n");
  write(dir / "c.qasm", "OPENQASM 2.0;\nqreg q[4];\nh q[0];\ncx q[0],q[1];\n");
  auto r = run({dir.string()});
  REQUIRE(r.code == kExitOk);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "name,n_qubits,g_in,added,swaps,depth_in,depth_out,ms,verified");
  CHECK(rows[1].rfind("a,5,9,", 0) == 0);
  CHECK(rows[2].rfind("b,", 0) == 0);
  CHECK(rows[3].rfind("c,", 0) == 0);
  CHECK(rows[4].rfind("TOTAL,", 0) == 0);
  CHECK(rows[4].ends_with(",3/3"));
  CHECK(fs::exists(dir / "summary.csv"));

  // Routed outputs are not picked up again, and the results repeat.
  auto again = run({dir.string(), "--jobs", "3"});
  REQUIRE(again.code == kExitOk);
  auto rows2 = lines(again.out);
  REQUIRE(rows2.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(without_ms(rows[i]) == without_ms(rows2[i]));
}

TEST_CASE("failures have distinct exit codes") {
  auto dir = scratch("fail");
  write(dir / "bad.qasm", "OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1],q[0];\n");
  write(dir / "ok.qasm", testing::fig3_text());
  CHECK(run({(dir / "bad.qasm").string()}).code == kExitParse);
  CHECK(run({"--bogus", (dir / "ok.qasm").string()}).code == kExitUsage);
  CHECK(run({"--eval", "fastest", (dir / "ok.qasm").string()}).code == kExitUsage);
  CHECK(run({"--device", "nowhere", (dir / "ok.qasm").string()}).code == kExitDevice);
  CHECK(run({(dir / "missing.qasm").string()}).code == kExitIo);
  CHECK(run({"--timeout-s", "1e-9", (dir / "ok.qasm").string()}).code == kExitTimeout);
  write(dir / "line6.txt", "bilateral: true\n0 1\n1 2\n2 3\n3 4\n4 5\n");
  write(dir / "star.qasm",
        "OPENQASM 2.0;\nqreg q[6];\ncx q[0],q[1];\ncx q[0],q[2];\ncx q[0],q[3];\n"
        "cx q[0],q[4];\ncx q[0],q[5];\ncx q[1],q[5];\ncx q[2],q[4];\ncx q[3],q[5];\n");
  CHECK(run({"--max-iters", "1", "--device", (dir / "line6.txt").string(),
             (dir / "star.qasm").string()})
            .code == kExitRouting);
  fs::remove(dir / "star.qasm");
  fs::remove(dir / "line6.txt");

  write(dir / "wide.qasm", "OPENQASM 2.0;\nqreg q[6];\ncx q[0],q[5];\n");
  CHECK(run({"--device", "qx2", (dir / "wide.qasm").string()}).code == kExitDevice);

  // A directory keeps going past a failing circuit and reports it.
  auto r = run({dir.string()});
  CHECK(r.code == kExitParse);
  CHECK(lines(r.out).size() == 5);
  CHECK(r.err.find("bad") != std::string::npos);
}

TEST_CASE("skipping verification is reported") {
  auto dir = scratch("noverify");
  write(dir / "fig3.qasm", testing::fig3_text());
  auto r = run({"--no-verify", (dir / "fig3.qasm").string()});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == false);
  CHECK(j["verification"] == "");
}
