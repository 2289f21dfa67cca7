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

// Serial, deliberately plain versions of the ascent kernels. They form full
// matrix products and dense traces and never fork threads. Tests compare the
// production kernels against these; the benchmark times both.

#ifndef QLEAK_LEAKAGE_REFERENCE_H_
#define QLEAK_LEAKAGE_REFERENCE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "qleak/quantum/povm.h"
#include "qleak/quantum/state.h"

namespace qleak::reference {

// sum_y max_x Re tr(rho^x F_y), with tr computed from the dense product.
double Objective(const Ensemble& ensemble, const Povm& povm,
                 std::vector<int>* argmax = nullptr);

absl::StatusOr<Povm> AscentStep(const Ensemble& ensemble, const Povm& povm,
                                double step_size, double regularization);

}  // namespace qleak::reference

#endif  // QLEAK_LEAKAGE_REFERENCE_H_
