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

#ifndef QLEAK_QUANTUM_ENCODERS_H_
#define QLEAK_QUANTUM_ENCODERS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "qleak/quantum/state.h"

namespace qleak {

// Index encoding: symbols "1".."d", uniform prior, rho^x = |x-1><x-1|.
absl::StatusOr<Ensemble> EncodeIndex(int dim);

// Three classical bits x = (x1, x2, x3) in dimension 8 with
//   psi^x = (x1|0> + (1-x1)|1> + x2|2> + (1-x2)|3> + x3|4> + (1-x3)|5>) /
//   sqrt(3).
// Labels are the bit strings "000".."111" with x1 first.
Ensemble EncodeAmplitude3Bit();

struct Preset {
  std::string name;
  Ensemble ensemble;
  // Free-text provenance carried into result manifests.
  std::string note;
};

// Names accepted after the "builtin:" prefix.
std::vector<std::string> PresetNames();
absl::StatusOr<Preset> LoadPreset(absl::string_view name);

}  // namespace qleak

#endif  // QLEAK_QUANTUM_ENCODERS_H_
