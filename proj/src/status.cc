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

#include "qleak/status.h"

#include <array>
#include <string>

#include "absl/strings/cord.h"
#include "absl/strings/str_cat.h"

namespace qleak {
namespace {

constexpr absl::string_view kPayloadUrl = "type.qleak/ErrorKind";

struct KindInfo {
  ErrorKind kind;
  absl::string_view name;
  absl::StatusCode code;
};

constexpr std::array<KindInfo, 17> kKinds = {{
    {ErrorKind::kNonSquare, "NonSquare", absl::StatusCode::kInvalidArgument},
    {ErrorKind::kNotHermitian, "NotHermitian",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kNotPsd, "NotPsd", absl::StatusCode::kInvalidArgument},
    {ErrorKind::kNonFinite, "NonFinite", absl::StatusCode::kInvalidArgument},
    {ErrorKind::kDimensionMismatch, "DimensionMismatch",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kNumericalFailure, "NumericalFailure",
     absl::StatusCode::kInternal},
    {ErrorKind::kInvalidDensity, "InvalidDensity",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kInvalidEnsemble, "InvalidEnsemble",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kInvalidPovm, "InvalidPovm",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kInvalidChannel, "InvalidChannel",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kInvalidProbability, "InvalidProbability",
     absl::StatusCode::kOutOfRange},
    {ErrorKind::kInvalidConfig, "InvalidConfig",
     absl::StatusCode::kInvalidArgument},
    {ErrorKind::kImaginaryLeak, "ImaginaryLeak", absl::StatusCode::kInternal},
    {ErrorKind::kDegenerateDraw, "DegenerateDraw",
     absl::StatusCode::kFailedPrecondition},
    {ErrorKind::kDimensionOverflow, "DimensionOverflow",
     absl::StatusCode::kOutOfRange},
    {ErrorKind::kUnsupportedDimension, "UnsupportedDimension",
     absl::StatusCode::kUnimplemented},
    {ErrorKind::kParseError, "ParseError", absl::StatusCode::kInvalidArgument},
}};

const KindInfo& Info(ErrorKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  return kKinds.front();
}

}  // namespace

absl::string_view ErrorKindName(ErrorKind kind) { return Info(kind).name; }

absl::Status MakeError(ErrorKind kind, absl::string_view message) {
  const KindInfo& info = Info(kind);
  absl::Status status(info.code, absl::StrCat(info.name, ": ", message));
  status.SetPayload(kPayloadUrl, absl::Cord(info.name));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  absl::optional<absl::Cord> payload = status.GetPayload(kPayloadUrl);
  if (!payload.has_value()) return std::nullopt;
  const std::string name(*payload);
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

}  // namespace qleak
