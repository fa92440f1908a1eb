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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsmap/coupling.hpp"
#include "tsmap/pipeline.hpp"

namespace tsmap {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitParse = 3,
  kExitRouting = 4,
  kExitVerify = 5,
  kExitTimeout = 6,
  kExitDevice = 7,
  kExitIo = 8,
};

struct BenchOptions {
  std::string device = "q20";
  PipelineOptions pipeline;
  std::uint64_t seed = 0;
  double timeout_s = 3600.0;
  int jobs = 1;
  std::optional<std::filesystem::path> out_dir;
  bool verify = true;
};

/// Outcome of one circuit; `status` is kExitOk or the code of the failure.
struct CircuitReport {
  std::string name;
  int status = kExitOk;
  std::string error;
  std::size_t n_qubits = 0;
  std::size_t g_in = 0;
  std::size_t added = 0;
  std::size_t swaps = 0;
  std::size_t depth_in = 0;
  std::size_t depth_out = 0;
  double ms = 0.0;
  std::string verified = "skipped";  // "true", "false" or "skipped"
  std::string verification;          // which checks ran
};

/// "small" up to depth 100, "large" above 1000, else "medium".
std::string scale_of(std::size_t depth);

/// Routes, verifies and writes artefacts for one circuit file.
CircuitReport run_circuit(
    const std::filesystem::path& file, const CouplingGraph& cg, const DistanceTable& dt,
    const BenchOptions& opts);

/// The .qasm inputs of a directory in name order, skipping routed outputs.
std::vector<std::filesystem::path> list_circuits(const std::filesystem::path& dir);

std::string csv_header();
std::string csv_row(const CircuitReport& r);
std::string csv_totals(const std::vector<CircuitReport>& rows);

/// Entry point of the command-line tool.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tsmap
