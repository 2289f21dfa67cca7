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

// The qleak command line. Commands are plain functions so tests can drive
// them in-process; tools/qleak_main.cc only forwards argv.

#ifndef QLEAK_CLI_COMMANDS_H_
#define QLEAK_CLI_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "qleak/leakage/ascent.h"
#include "qleak/quantum/ensemble_json.h"

namespace qleak::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitNumeric = 3,
  kExitUnsupported = 4,
  kExitPropertyFailure = 5,
};

// Maps a failed status onto the exit-code contract.
int ExitCodeFor(const absl::Status& status);

struct ComputeArgs {
  std::string ensemble;
  AscentConfig config;
  std::string out_dir;
};

struct NoiseSweepArgs {
  std::string ensemble;
  AscentConfig config;
  ChannelKind channel = ChannelKind::kGlobal;
  double p_start = 0.0;
  double p_end = 1.0;
  int p_steps = 21;
  std::string out_dir;
};

struct VerifyArgs {
  std::string ensemble;
  AscentConfig config;
  std::optional<std::string> channel_file;
  std::optional<std::string> out_dir;
  bool corrupt_optimal_povm = false;
};

struct PresetArgs {
  std::string name;
  std::string out_file;
};

// Writes result.json and trace_restart_<r>.csv into out_dir.
int RunCompute(const ComputeArgs& args, std::ostream& out, std::ostream& err);
// Writes noise_sweep.csv and noise_sweep.json into out_dir.
int RunNoiseSweep(const NoiseSweepArgs& args, std::ostream& out,
                  std::ostream& err);
// Prints a pass/fail table; writes verify.json when out_dir is set.
int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
// Emits a builtin preset as an ensemble JSON file.
int RunPreset(const PresetArgs& args, std::ostream& out, std::ostream& err);

// Full argv front end.
int RunMain(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace qleak::cli

#endif  // QLEAK_CLI_COMMANDS_H_
