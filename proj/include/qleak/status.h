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

#ifndef QLEAK_STATUS_H_
#define QLEAK_STATUS_H_

#include <optional>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace qleak {

// Fine-grained failure kinds. Each kind maps onto a canonical absl status
// code and is also attached to the status as a payload, so callers can branch
// on the exact kind (the CLI uses it to choose exit codes).
enum class ErrorKind {
  kNonSquare,
  kNotHermitian,
  kNotPsd,
  kNonFinite,
  kDimensionMismatch,
  kNumericalFailure,
  kInvalidDensity,
  kInvalidEnsemble,
  kInvalidPovm,
  kInvalidChannel,
  kInvalidProbability,
  kInvalidConfig,
  kImaginaryLeak,
  kDegenerateDraw,
  kDimensionOverflow,
  kUnsupportedDimension,
  kParseError,
};

absl::string_view ErrorKindName(ErrorKind kind);

// Builds a status whose message is "<KindName>: <message>".
absl::Status MakeError(ErrorKind kind, absl::string_view message);

// Returns the kind attached by MakeError, or nullopt for foreign statuses.
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

}  // namespace qleak

#define QLEAK_RETURN_IF_ERROR(expr)        \
  do {                                     \
    ::absl::Status qleak_status_ = (expr); \
    if (!qleak_status_.ok()) {             \
      return qleak_status_;                \
    }                                      \
  } while (false)

#define QLEAK_CONCAT_INNER_(a, b) a##b
#define QLEAK_CONCAT_(a, b) QLEAK_CONCAT_INNER_(a, b)

#define QLEAK_ASSIGN_OR_RETURN(lhs, rexpr)                                    \
  QLEAK_ASSIGN_OR_RETURN_IMPL_(QLEAK_CONCAT_(qleak_statusor_, __LINE__), lhs, \
                               rexpr)

#define QLEAK_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                 \
  if (!statusor.ok()) {                                    \
    return statusor.status();                              \
  }                                                        \
  lhs = std::move(statusor).value()

#endif  // QLEAK_STATUS_H_
