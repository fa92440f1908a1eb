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

#include "tsmap/bench.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "tsmap/verifier.hpp"

namespace tsmap {

namespace fs = std::filesystem;

std::string scale_of(std::size_t depth) {
  if (depth <= 100) return "small";
  if (depth > 1000) return "large";
  return "medium";
}

namespace {

std::string stem_of(const fs::path& file) {
  std::string name = file.filename().string();
  const std::string ext = ".qasm";
  if (name.size() > ext.size() && name.ends_with(ext)) name.resize(name.size() - ext.size());
  return name;
}

fs::path artefact_dir(const fs::path& file, const BenchOptions& opts) {
  if (opts.out_dir) return *opts.out_dir;
  return file.has_parent_path() ? file.parent_path() : fs::path(".");
}

nlohmann::json to_json(const CircuitReport& r, const BenchOptions& opts) {
  const RouterConfig& rc = opts.pipeline.router;
  nlohmann::json j;
  j["name"] = r.name;
  j["device"] = opts.device;
  j["evaluator"] = std::string(to_string(rc.evaluator));
  j["delta"] = rc.delta;
  j["lookahead"] = rc.lookahead;
  j["tenure"] = rc.tenure;
  if (rc.evaluator == Evaluator::Cca) {
    j["rho"] = rc.rho;
    j["threshold"] = rc.threshold;
  }
  j["status"] = r.status;
  if (!r.error.empty()) j["error"] = r.error;
  j["n_qubits"] = r.n_qubits;
  j["g_in"] = r.g_in;
  j["added_gates"] = r.added;
  j["swaps"] = r.swaps;
  j["depth_in"] = r.depth_in;
  j["depth_out"] = r.depth_out;
  j["scale"] = scale_of(r.depth_in);
  j["wall_ms"] = r.ms;
  j["verified"] = r.verified == "true";
  j["verification"] = r.verification;
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

}  // namespace

CircuitReport run_circuit(
    const fs::path& file, const CouplingGraph& cg, const DistanceTable& dt,
    const BenchOptions& opts) {
  CircuitReport rep;
  rep.name = stem_of(file);
  const auto start = std::chrono::steady_clock::now();
  QasmProgram input;
  try {
    input = read_qasm_file(file.string());
  } catch (const QasmError& e) {
    rep.status = kExitParse;
    rep.error = e.what();
    return rep;
  } catch (const std::exception& e) {
    rep.status = kExitIo;
    rep.error = e.what();
    return rep;
  }
  rep.n_qubits = static_cast<std::size_t>(input.num_qubits);
  rep.g_in = input.gates.size();

  PipelineOptions popts = opts.pipeline;
  popts.router.deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(opts.timeout_s));
  RoutedResult rr;
  try {
    rr = transform(input, cg, dt, popts);
  } catch (const TimeoutError& e) {
    rep.status = kExitTimeout;
    rep.error = e.what();
    return rep;
  } catch (const DeviceError& e) {
    rep.status = kExitDevice;
    rep.error = e.what();
    return rep;
  } catch (const std::exception& e) {
    rep.status = kExitRouting;
    rep.error = e.what();
    return rep;
  }
  rep.g_in = rr.stats.gates_in;
  rep.added = rr.stats.added_gates;
  rep.swaps = rr.stats.swaps;
  rep.depth_in = rr.stats.depth_in;
  rep.depth_out = rr.stats.depth_out;

  if (opts.verify) {
    CheckResult check = structural_check(rr.source, rr.output, rr, cg);
    rep.verification = "structural";
    if (check && rr.source.num_qubits <= 10) {
      check = assert_equivalence(rr.source, rr.output, rr, opts.seed);
      rep.verification += "+statevector";
    }
    rep.verified = check ? "true" : "false";
    if (!check) {
      rep.status = kExitVerify;
      rep.error = check.message;
    }
  }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();

  try {
    const fs::path dir = artefact_dir(file, opts);
    fs::create_directories(dir);
    write_file(dir / (rep.name + ".routed.qasm"), write_qasm(rr.output));
    write_file(dir / (rep.name + ".report.json"), to_json(rep, opts).dump(2) + "\n");
  } catch (const std::exception& e) {
    if (rep.status == kExitOk) {
      rep.status = kExitIo;
      rep.error = e.what();
    }
  }
  return rep;
}

std::vector<fs::path> list_circuits(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (!name.ends_with(".qasm") || name.ends_with(".routed.qasm")) continue;
    out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string csv_header() { return "name,n_qubits,g_in,added,swaps,depth_in,depth_out,ms,verified"; }

std::string csv_row(const CircuitReport& r) {
  std::ostringstream s;
  s << r.name << ',' << r.n_qubits << ',' << r.g_in << ',' << r.added << ',' << r.swaps << ','
    << r.depth_in << ',' << r.depth_out << ',' << std::fixed << std::setprecision(2) << r.ms
    << ',' << r.verified;
  return s.str();
}

std::string csv_totals(const std::vector<CircuitReport>& rows) {
  CircuitReport t;
  t.name = "TOTAL";
  std::size_t ok = 0;
  std::size_t checked = 0;
  for (const auto& r : rows) {
    t.n_qubits += r.n_qubits;
    t.g_in += r.g_in;
    t.added += r.added;
    t.swaps += r.swaps;
    t.depth_in += r.depth_in;
    t.depth_out += r.depth_out;
    t.ms += r.ms;
    if (r.verified != "skipped") ++checked;
    if (r.verified == "true") ++ok;
  }
  t.verified = std::to_string(ok) + "/" + std::to_string(checked);
  return csv_row(t);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maps a quantum circuit onto a device coupling graph."};
  app.name("tsmap");
  BenchOptions opts;
  RouterConfig& rc = opts.pipeline.router;
  std::string input;
  std::string eval = "num";
  std::string out_dir;
  app.add_option("input", input, "OpenQASM 2 file or directory of them")->required();
  app.add_option("--device", opts.device, "qx2, qx3, qx4, qx5, q20 or a device file")
      ->capture_default_str();
  app.add_option("--eval", eval, "num, dep or cca")
      ->check(CLI::IsMember({"num", "dep", "depth", "cca"}))
      ->capture_default_str();
  app.add_option("--delta", rc.delta, "look-ahead attenuation")->capture_default_str();
  app.add_option("--lookahead", rc.lookahead, "look-ahead layers")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tenure", rc.tenure, "tabu tenure in iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--max-iters", rc.max_iters, "iterations per layer, 0 for 2|E|")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--rho", rc.rho, "CCA smoothing factor")->check(CLI::Range(0.0, 1.0));
  app.add_option("--threshold", rc.threshold, "CCA weight threshold, 0 for 10|E|")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opts.seed, "seed for the equivalence test states")
      ->capture_default_str();
  app.add_option("--timeout-s", opts.timeout_s, "per-circuit wall-clock limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", opts.jobs, "circuits processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", out_dir, "directory for routed circuits and reports");
  bool no_verify = false;
  app.add_flag("--no-verify", no_verify, "skip the correctness checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tsmap: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  rc.evaluator = parse_evaluator(eval);
  opts.verify = !no_verify;
  if (!out_dir.empty()) opts.out_dir = fs::path(out_dir);

  std::optional<CouplingGraph> cg;
  try {
    cg.emplace(load_device(opts.device));
  } catch (const std::exception& e) {
    err << "tsmap: " << e.what() << "\n";
    return kExitDevice;
  }
  std::optional<DistanceTable> dt;
  try {
    dt.emplace(*cg);
  } catch (const std::exception& e) {
    err << "tsmap: " << e.what() << "\n";
    return kExitDevice;
  }

  const fs::path in(input);
  std::error_code ec;
  if (!fs::exists(in, ec)) {
    err << "tsmap: no such file or directory: " << input << "\n";
    return kExitIo;
  }
  if (!fs::is_directory(in)) {
    CircuitReport r = run_circuit(in, *cg, *dt, opts);
    out << to_json(r, opts).dump(2) << "\n";
    if (r.status != kExitOk) err << "tsmap: " << r.name << ": " << r.error << "\n";
    return r.status;
  }

  const auto files = list_circuits(in);
  std::vector<CircuitReport> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      rows[i] = run_circuit(files[i], *cg, *dt, opts);
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), files.size());
    for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream csv;
  csv << csv_header() << "\n";
  for (const auto& r : rows) csv << csv_row(r) << "\n";
  csv << csv_totals(rows) << "\n";
  out << csv.str();
  int status = kExitOk;
  for (const auto& r : rows) {
    if (r.status != kExitOk) {
      err << "tsmap: " << r.name << ": " << r.error << "\n";
      if (status == kExitOk) status = r.status;
    }
  }
  try {
    const fs::path dir = opts.out_dir ? *opts.out_dir : in;
    fs::create_directories(dir);
    write_file(dir / "summary.csv", csv.str());
  } catch (const std::exception& e) {
    err << "tsmap: " << e.what() << "\n";
    if (status == kExitOk) status = kExitIo;
  }
  return status;
}

}  // namespace tsmap
