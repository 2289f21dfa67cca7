//
// Copyright 2026 The qleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "qleak/cli/commands.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "qleak/cli/manifest.h"
#include "qleak/leakage/oracles.h"
#include "qleak/leakage/verify.h"
#include "qleak/quantum/channel.h"
#include "qleak/quantum/encoders.h"
#include "qleak/status.h"

namespace qleak::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int Fail(const absl::Status& status, std::ostream& err) {
  err << "qleak: " << status.message() << "\n";
  return ExitCodeFor(status);
}

absl::Status WriteText(const fs::path& path, absl::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("cannot write '", path.string(), "'"));
  }
  out << text;
  return out.good()
             ? absl::OkStatus()
             : MakeError(ErrorKind::kParseError,
                         absl::StrCat("short write to '", path.string(), "'"));
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("cannot create '", dir, "': ", ec.message()));
  }
  return absl::OkStatus();
}

std::string G17(double v) { return absl::StrFormat("%.17g", v); }

std::string TraceCsv(const ConvergenceTrace& trace) {
  std::string csv = "iteration,objective,leakage_bits,step_size\n";
  for (const auto& pt : trace) {
    absl::StrAppend(&csv, pt.iteration, ",", G17(pt.objective), ",",
                    G17(pt.leakage_bits), ",", G17(pt.step_size), "\n");
  }
  return csv;
}

json PovmToJson(const Povm& povm) {
  json elements = json::array();
  for (const auto& f : povm.elements()) elements.push_back(MatrixToJson(f));
  return elements;
}

void AddAscentFlags(CLI::App* cmd, AscentConfig* config) {
  cmd->add_option("--mu", config->step_size, "Initial step size")
      ->capture_default_str();
  cmd->add_option("--eps", config->epsilon, "Objective-change threshold")
      ->capture_default_str();
  cmd->add_option("--max-iters", config->max_iters, "Iteration cap per restart")
      ->capture_default_str();
  cmd->add_option("--restarts", config->restarts, "Random restarts")
      ->capture_default_str();
  cmd->add_option("--povm-size", config->povm_size,
                  "POVM outcomes (default d^2)");
  cmd->add_option("--seed", config->seed, "Base seed")->capture_default_str();
  cmd->add_option("--threads", config->threads,
                  "Restart threads (default: all cores)");
  cmd->add_flag("--no-backtracking{false}", config->backtracking,
                "Take raw steps even when the objective drops");
}

absl::StatusOr<std::vector<double>> BuildGrid(double start, double end,
                                              int steps) {
  if (!(start >= 0.0 && end <= 1.0 && start <= end)) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("need 0 <= p-start <= p-end <= 1, got "
                                     "[%g, %g]",
                                     start, end));
  }
  if (steps < 2) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("p-steps must be >= 2, got %d", steps));
  }
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = start + (end - start) * i / (steps - 1);
  }
  grid.back() = end;
  return grid;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  const std::optional<ErrorKind> kind = GetErrorKind(status);
  if (!kind.has_value()) return kExitNumeric;
  switch (*kind) {
    case ErrorKind::kNumericalFailure:
    case ErrorKind::kImaginaryLeak:
    case ErrorKind::kDegenerateDraw:
      return kExitNumeric;
    case ErrorKind::kUnsupportedDimension:
    case ErrorKind::kDimensionOverflow:
      return kExitUnsupported;
    default:
      return kExitInput;
  }
}

int RunCompute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  absl::StatusOr<LoadedEnsemble> loaded = LoadEnsemble(args.ensemble);
  if (!loaded.ok()) return Fail(loaded.status(), err);
  const Ensemble& ensemble = loaded->ensemble;
  if (absl::Status s = ValidateConfig(args.config, ensemble.dim()); !s.ok()) {
    return Fail(s, err);
  }
  absl::StatusOr<LeakageReport> report = ComputeLeakage(ensemble, args.config);
  if (!report.ok()) return Fail(report.status(), err);

  if (absl::Status s = EnsureDir(args.out_dir); !s.ok()) return Fail(s, err);
  json trace_files = json::array();
  for (size_t r = 0; r < report->restarts.size(); ++r) {
    const std::string name = absl::StrFormat("trace_restart_%d.csv", r);
    trace_files.push_back(name);
    if (absl::Status s = WriteText(fs::path(args.out_dir) / name,
                                   TraceCsv(report->restarts[r].trace));
        !s.ok()) {
      return Fail(s, err);
    }
  }
  json iterations = json::array();
  for (const auto& r : report->restarts) iterations.push_back(r.iterations);

  RunManifest manifest{.command = "compute",
                       .config = ConfigToJson(args.config, ensemble.dim()),
                       .input_source = loaded->source,
                       .input_sha256 = loaded->content_sha256,
                       .note = loaded->note,
                       .wall_seconds = SecondsSince(start)};
  const json result = {
      {"leakage_bits", report->leakage_bits},
      {"objective", report->objective},
      {"ceiling_bits", report->ceiling_bits},
      {"best_restart", report->best_restart},
      {"restart_leakages", report->RestartLeakages()},
      {"converged", report->ConvergedFlags()},
      {"iterations", iterations},
      {"trace_files", trace_files},
      {"optimal_povm", PovmToJson(report->optimal_povm)},
      {"manifest", manifest.ToJson()},
  };
  if (absl::Status s = WriteText(fs::path(args.out_dir) / "result.json",
                                 result.dump(2) + "\n");
      !s.ok()) {
    return Fail(s, err);
  }
  out << absl::StrFormat(
      "leakage_bits %.9f (ceiling %.6f, best restart %d, "
      "%s)\n",
      report->leakage_bits, report->ceiling_bits, report->best_restart,
      report->AllConverged() ? "all restarts converged"
                             : "some restarts unconverged");
  return kExitOk;
}

int RunNoiseSweep(const NoiseSweepArgs& args, std::ostream& out,
                  std::ostream& err) {
  const auto start = Clock::now();
  absl::StatusOr<std::vector<double>> grid =
      BuildGrid(args.p_start, args.p_end, args.p_steps);
  if (!grid.ok()) return Fail(grid.status(), err);
  absl::StatusOr<LoadedEnsemble> loaded = LoadEnsemble(args.ensemble);
  if (!loaded.ok()) return Fail(loaded.status(), err);
  const Ensemble& ensemble = loaded->ensemble;
  if (absl::Status s = ValidateConfig(args.config, ensemble.dim()); !s.ok()) {
    return Fail(s, err);
  }
  int qubits = 0;
  if (args.channel == ChannelKind::kLocal) {
    absl::StatusOr<int> k = QubitCount(ensemble.dim());
    if (!k.ok()) return Fail(k.status(), err);
    if (*k > kMaxLocalQubits) {
      return Fail(MakeError(ErrorKind::kDimensionOverflow,
                            absl::StrFormat("%d qubits exceeds the local "
                                            "channel limit of %d",
                                            *k, kMaxLocalQubits)),
                  err);
    }
    qubits = *k;
  } else if (ensemble.dim() < 2) {
    return Fail(MakeError(ErrorKind::kUnsupportedDimension,
                          "depolarizing needs dimension >= 2"),
                err);
  }

  absl::StatusOr<LeakageReport> clean = ComputeLeakage(ensemble, args.config);
  if (!clean.ok()) return Fail(clean.status(), err);
  const double q0 = clean->leakage_bits;

  std::string csv = "p,direct_leakage_bits,formula_bits,ratio\n";
  json rows = json::array();
  for (double p : *grid) {
    double direct = q0;
    if (p != 0.0) {
      absl::StatusOr<KrausChannel> channel =
          args.channel == ChannelKind::kGlobal
              ? DepolarizingGlobal(p, ensemble.dim())
              : DepolarizingLocal(p, qubits);
      if (!channel.ok()) return Fail(channel.status(), err);
      absl::StatusOr<Ensemble> noisy = ApplyChannel(*channel, ensemble);
      if (!noisy.ok()) return Fail(noisy.status(), err);
      absl::StatusOr<LeakageReport> r = ComputeLeakage(*noisy, args.config);
      if (!r.ok()) return Fail(r.status(), err);
      direct = r->leakage_bits;
    }
    const double q_clamped = std::max(q0, 0.0);
    absl::StatusOr<double> formula =
        args.channel == ChannelKind::kGlobal
            ? NoisyLeakageGlobal(q_clamped, p)
            : NoisyLeakageLocalBound(q_clamped, p, qubits);
    if (!formula.ok()) return Fail(formula.status(), err);
    // Without leakage there is nothing to attenuate; report the ratio as 1.
    const double ratio = q0 > 1e-12 ? direct / q0 : 1.0;
    absl::StrAppend(&csv, G17(p), ",", G17(direct), ",", G17(*formula), ",",
                    G17(ratio), "\n");
    rows.push_back({{"p", p},
                    {"direct_leakage_bits", direct},
                    {"formula_bits", *formula},
                    {"ratio", ratio}});
  }

  if (absl::Status s = EnsureDir(args.out_dir); !s.ok()) return Fail(s, err);
  if (absl::Status s =
          WriteText(fs::path(args.out_dir) / "noise_sweep.csv", csv);
      !s.ok()) {
    return Fail(s, err);
  }
  json config = ConfigToJson(args.config, ensemble.dim());
  config["channel"] = std::string(ChannelKindName(args.channel));
  config["p_start"] = args.p_start;
  config["p_end"] = args.p_end;
  config["p_steps"] = args.p_steps;
  RunManifest manifest{.command = "noise-sweep",
                       .config = std::move(config),
                       .input_source = loaded->source,
                       .input_sha256 = loaded->content_sha256,
                       .note = loaded->note,
                       .wall_seconds = SecondsSince(start)};
  const json result = {
      {"noiseless_leakage_bits", q0},
      {"formula",
       args.channel == ChannelKind::kGlobal ? "exact" : "upper_bound"},
      {"rows", std::move(rows)},
      {"manifest", manifest.ToJson()}};
  if (absl::Status s = WriteText(fs::path(args.out_dir) / "noise_sweep.json",
                                 result.dump(2) + "\n");
      !s.ok()) {
    return Fail(s, err);
  }
  out << absl::StrFormat(
      "noiseless leakage %.9f bits; %d noise levels written\n", q0,
      grid->size());
  return kExitOk;
}

int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  absl::StatusOr<LoadedEnsemble> loaded = LoadEnsemble(args.ensemble);
  if (!loaded.ok()) return Fail(loaded.status(), err);
  const Ensemble& ensemble = loaded->ensemble;
  if (absl::Status s = ValidateConfig(args.config, ensemble.dim()); !s.ok()) {
    return Fail(s, err);
  }

  VerifyOptions options;
  options.seed = args.config.seed;
  options.corrupt_optimal_povm = args.corrupt_optimal_povm;
  json channel_json = nullptr;
  if (args.channel_file.has_value()) {
    std::ifstream in(*args.channel_file, std::ios::binary);
    if (!in) {
      return Fail(MakeError(ErrorKind::kParseError,
                            absl::StrCat("cannot read channel file '",
                                         *args.channel_file, "'")),
                  err);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    absl::StatusOr<ChannelSpec> spec = ParseChannelJson(buffer.str());
    if (!spec.ok()) return Fail(spec.status(), err);
    absl::StatusOr<KrausChannel> channel = BuildChannel(*spec, ensemble.dim());
    if (!channel.ok()) return Fail(channel.status(), err);
    options.channel = *channel;
    if (spec->kind == ChannelKind::kGlobal) options.global_p = spec->p;
    if (spec->kind == ChannelKind::kLocal) options.local_p = spec->p;
    channel_json = {{"kind", std::string(ChannelKindName(spec->kind))},
                    {"p", spec->p},
                    {"sha256", Sha256Hex(buffer.str())}};
  }

  absl::StatusOr<PropertyReport> report =
      VerifyProperties(ensemble, args.config, options);
  if (!report.ok()) return Fail(report.status(), err);

  out << absl::StrFormat("%-20s %-6s %16s %16s  %s\n", "check", "result",
                         "value", "bound", "detail");
  for (const auto& c : report->checks) {
    const char* verdict = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    out << absl::StrFormat("%-20s %-6s %16.9g %16.9g  %s\n", c.name, verdict,
                           c.value, c.bound, c.detail);
  }
  out << absl::StrFormat(
      "leakage %.9f bits; accessible information >= %.9f "
      "bits\n",
      report->leakage_bits, report->accessible_information_lower_bound);

  if (args.out_dir.has_value()) {
    if (absl::Status s = EnsureDir(*args.out_dir); !s.ok()) return Fail(s, err);
    json config = ConfigToJson(args.config, ensemble.dim());
    config["channel"] = channel_json;
    RunManifest manifest{.command = "verify",
                         .config = std::move(config),
                         .input_source = loaded->source,
                         .input_sha256 = loaded->content_sha256,
                         .note = loaded->note,
                         .wall_seconds = SecondsSince(start)};
    json doc = PropertyReportToJson(*report);
    doc["manifest"] = manifest.ToJson();
    if (absl::Status s = WriteText(fs::path(*args.out_dir) / "verify.json",
                                   doc.dump(2) + "\n");
        !s.ok()) {
      return Fail(s, err);
    }
  }
  return report->AllPassed() ? kExitOk : kExitPropertyFailure;
}

int RunPreset(const PresetArgs& args, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Preset> preset = LoadPreset(args.name);
  if (!preset.ok()) return Fail(preset.status(), err);
  const std::string text = EnsembleToJson(preset->ensemble).dump(2) + "\n";
  if (args.out_file.empty() || args.out_file == "-") {
    out << text;
    return kExitOk;
  }
  if (absl::Status s = WriteText(args.out_file, text); !s.ok())
    return Fail(s, err);
  return kExitOk;
}

int RunMain(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"qleak: maximal quantum leakage of classical-quantum ensembles"};
  app.require_subcommand(1);

  ComputeArgs compute;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "Optimize leakage over POVMs");
  compute_cmd
      ->add_option("--ensemble", compute.ensemble, "Path or builtin:NAME")
      ->required();
  compute_cmd->add_option("--out", compute.out_dir, "Output directory")
      ->required();
  AddAscentFlags(compute_cmd, &compute.config);

  NoiseSweepArgs sweep;
  std::string sweep_channel = "global";
  CLI::App* sweep_cmd =
      app.add_subcommand("noise-sweep", "Leakage versus depolarizing strength");
  sweep_cmd->add_option("--ensemble", sweep.ensemble, "Path or builtin:NAME")
      ->required();
  sweep_cmd->add_option("--channel", sweep_channel, "global or local")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  sweep_cmd->add_option("--p-start", sweep.p_start)->capture_default_str();
  sweep_cmd->add_option("--p-end", sweep.p_end)->capture_default_str();
  sweep_cmd->add_option("--p-steps", sweep.p_steps)->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_dir, "Output directory")->required();
  AddAscentFlags(sweep_cmd, &sweep.config);

  VerifyArgs verify;
  std::string verify_channel, verify_out;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check leakage properties on an ensemble");
  verify_cmd->add_option("--ensemble", verify.ensemble, "Path or builtin:NAME")
      ->required();
  verify_cmd->add_option("--channel-file", verify_channel,
                         "Channel JSON for the data-processing check");
  verify_cmd->add_option("--out", verify_out, "Directory for verify.json");
  AddAscentFlags(verify_cmd, &verify.config);
  // Test hook for the failure path; hidden from --help.
  verify_cmd->add_flag("--inject-corrupt-povm", verify.corrupt_optimal_povm)
      ->group("");

  PresetArgs preset;
  CLI::App* preset_cmd =
      app.add_subcommand("preset", "Write a builtin ensemble as JSON");
  preset_cmd->add_option("--name", preset.name)
      ->required()
      ->check(CLI::IsMember(PresetNames()));
  preset_cmd->add_option("--out", preset.out_file, "File (default stdout)");

  std::vector<const char*> raw;
  raw.push_back("qleak");
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (compute_cmd->parsed()) return RunCompute(compute, out, err);
  if (sweep_cmd->parsed()) {
    sweep.channel =
        sweep_channel == "local" ? ChannelKind::kLocal : ChannelKind::kGlobal;
    return RunNoiseSweep(sweep, out, err);
  }
  if (verify_cmd->parsed()) {
    if (!verify_channel.empty()) verify.channel_file = verify_channel;
    if (!verify_out.empty()) verify.out_dir = verify_out;
    return RunVerify(verify, out, err);
  }
  return RunPreset(preset, out, err);
}

}  // namespace qleak::cli
