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

// JSON documents for ensembles and channels.
//
// Ensemble:
//   { "dimension": int,
//     "symbols": [ { "label": string, "prior": number (optional),
//                    "state": <state> }, ... ] }
//   <state> is one of
//     { "kind": "basis_index", "index": int }
//     { "kind": "pure_vector", "amplitudes": [[re, im], ...], "normalize": bool
//     } { "kind": "density_matrix", "rows": [[[re, im], ...], ...] }
//   Priors are either all present or all absent (uniform).
//
// Channel:
//   { "kind": "global" | "local" | "kraus", "p": number,
//     "kraus_ops": [ <matrix>, ... ] }   // matrix = rows of [re, im]

#ifndef QLEAK_QUANTUM_ENSEMBLE_JSON_H_
#define QLEAK_QUANTUM_ENSEMBLE_JSON_H_

#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "qleak/quantum/channel.h"
#include "qleak/quantum/state.h"

namespace qleak {

absl::StatusOr<Ensemble> EnsembleFromJson(const nlohmann::json& doc);
absl::StatusOr<Ensemble> ParseEnsembleJson(absl::string_view text);

// Emits every state as a density_matrix entry with explicit priors, so
// re-parsing reproduces the ensemble bit for bit.
nlohmann::json EnsembleToJson(const Ensemble& ensemble);

nlohmann::json MatrixToJson(const CMatrix& m);
absl::StatusOr<CMatrix> MatrixFromJson(const nlohmann::json& rows);

enum class ChannelKind { kGlobal, kLocal, kKraus };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kGlobal;
  double p = 0.0;
  std::optional<KrausChannel> kraus;  // only for kKraus
};

absl::StatusOr<ChannelSpec> ParseChannelJson(absl::string_view text);

// log2(dim) when dim is a power of two >= 2; UnsupportedDimension otherwise.
absl::StatusOr<int> QubitCount(int dim);

// Materializes the channel for an ensemble of dimension `dim`.
absl::StatusOr<KrausChannel> BuildChannel(const ChannelSpec& spec, int dim);

absl::string_view ChannelKindName(ChannelKind kind);

}  // namespace qleak

#endif  // QLEAK_QUANTUM_ENSEMBLE_JSON_H_
