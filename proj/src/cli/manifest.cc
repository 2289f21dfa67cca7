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

#include "qleak/cli/manifest.h"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "qleak/quantum/encoders.h"
#include "qleak/quantum/ensemble_json.h"
#include "qleak/status.h"

namespace qleak::cli {

std::string Sha256Hex(absl::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i)
    absl::StrAppendFormat(&hex, "%02x", digest[i]);
  return hex;
}

absl::StatusOr<LoadedEnsemble> LoadEnsemble(absl::string_view spec) {
  constexpr absl::string_view kBuiltin = "builtin:";
  if (absl::StartsWith(spec, kBuiltin)) {
    QLEAK_ASSIGN_OR_RETURN(Preset preset,
                           LoadPreset(spec.substr(kBuiltin.size())));
    const std::string canonical = EnsembleToJson(preset.ensemble).dump();
    return LoadedEnsemble{std::move(preset.ensemble), std::string(spec),
                          Sha256Hex(canonical), std::move(preset.note)};
  }
  std::ifstream in{std::string(spec), std::ios::binary};
  if (!in) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("cannot read ensemble file '", spec, "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  QLEAK_ASSIGN_OR_RETURN(Ensemble ensemble, ParseEnsembleJson(text));
  return LoadedEnsemble{std::move(ensemble), std::string(spec), Sha256Hex(text),
                        ""};
}

nlohmann::json RunManifest::ToJson() const {
  nlohmann::json out = {
      {"command", command},
      {"config", config},
      {"input", {{"source", input_source}, {"sha256", input_sha256}}},
      {"tool_version", std::string(kToolVersion)},
      {"timings", {{"wall_seconds", wall_seconds}}},
  };
  if (!note.empty()) out["note"] = note;
  return out;
}

nlohmann::json ConfigToJson(const AscentConfig& config, int dim) {
  return {
      {"step_size", config.step_size},
      {"epsilon", config.epsilon},
      {"max_iters", config.max_iters},
      {"restarts", config.restarts},
      {"seed", config.seed},
      {"povm_size", EffectivePovmSize(config, dim)},
      {"backtracking", config.backtracking},
      {"regularization", config.regularization},
      {"min_step_size", kMinStepSize},
  };
}

}  // namespace qleak::cli
