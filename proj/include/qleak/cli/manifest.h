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

#ifndef QLEAK_CLI_MANIFEST_H_
#define QLEAK_CLI_MANIFEST_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "qleak/leakage/ascent.h"
#include "qleak/quantum/state.h"

namespace qleak::cli {

inline constexpr absl::string_view kToolVersion = "0.3.0";

// An ensemble plus where it came from.
struct LoadedEnsemble {
  Ensemble ensemble;
  std::string source;  // file path or "builtin:NAME"
  std::string content_sha256;
  std::string note;  // preset provenance, empty for files
};

// Accepts a file path or "builtin:NAME".
absl::StatusOr<LoadedEnsemble> LoadEnsemble(absl::string_view spec);

std::string Sha256Hex(absl::string_view data);

// Embedded in every result document. Everything except `timings` is a pure
// function of the inputs, so results are byte-identical across reruns once
// timings are stripped.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::string input_source;
  std::string input_sha256;
  std::string note;
  double wall_seconds = 0.0;

  nlohmann::json ToJson() const;
};

nlohmann::json ConfigToJson(const AscentConfig& config, int dim);

}  // namespace qleak::cli

#endif  // QLEAK_CLI_MANIFEST_H_
