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

#ifndef QLEAK_LEAKAGE_OBJECTIVE_H_
#define QLEAK_LEAKAGE_OBJECTIVE_H_

#include <Eigen/Dense>
#include <vector>

#include "absl/status/statusor.h"
#include "qleak/quantum/povm.h"
#include "qleak/quantum/state.h"

namespace qleak {

struct ObjectiveValue {
  // sum_y max_x Re tr(rho^x F_y); lies in [1, |X|] for a valid POVM.
  double objective = 0.0;
  // log2(objective): the leakage certified by this particular POVM.
  double leakage_bits = 0.0;
  // argmax[y] = x*(y), smallest symbol index on ties.
  std::vector<int> argmax;
};

// Re tr(rho^x F_y) for every outcome y (rows) and symbol x (columns).
// Parallel over outcomes for large POVMs.
Eigen::MatrixXd OverlapTable(const Ensemble& ensemble, const Povm& povm);

// Evaluates the leakage objective for one fixed measurement. Priors play no
// role.
absl::StatusOr<ObjectiveValue> LeakageObjective(const Ensemble& ensemble,
                                                const Povm& povm);

// Classical I(X;Y) in bits for the joint law p_X(x) P[y|x].
absl::StatusOr<double> MutualInformation(const Ensemble& ensemble,
                                         const Povm& povm);

// min(log2 |X|, 2 log2 d): no POVM can certify more leakage than this.
double CeilingBits(const Ensemble& ensemble);

}  // namespace qleak

#endif  // QLEAK_LEAKAGE_OBJECTIVE_H_
