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

// Closed forms and exhaustive searches that check the optimizer from outside.

#ifndef QLEAK_LEAKAGE_ORACLES_H_
#define QLEAK_LEAKAGE_ORACLES_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "qleak/quantum/povm.h"
#include "qleak/quantum/state.h"

namespace qleak {

// Exact leakage of a two-symbol ensemble: log2(1 + T(rho0, rho1)).
//
// With two symbols the objective is 1 + sum_y max(tr((rho0 - rho1) F_y), 0),
// maximized by projecting onto the positive eigenspace of rho0 - rho1.
absl::StatusOr<double> TwoStateLeakage(const DensityOperator& rho0,
                                       const DensityOperator& rho1);

// {P, I - P} with P the projector onto the strictly positive eigenspace of
// rho0 - rho1.
absl::StatusOr<Povm> HelstromPovm(const DensityOperator& rho0,
                                  const DensityOperator& rho1);

struct BruteForceOptions {
  // Polar grid points; the azimuthal grid is twice as fine.
  int grid_resolution = 256;
  // Random rank-one POVMs drawn for each of m = 3 and m = 4.
  int random_samples = 100000;
  uint64_t seed = 0;
};

// Best leakage found by exhaustive search over qubit rank-one POVMs: a
// Bloch-sphere grid of projective measurements plus random 3- and 4-outcome
// POVMs. Always a lower bound on the true leakage. Qubits only.
absl::StatusOr<double> BruteForceLeakage(const Ensemble& ensemble,
                                         const BruteForceOptions& options = {});

// Leakage after global depolarizing noise, exact: log2(p + (1 - p) 2^q).
absl::StatusOr<double> NoisyLeakageGlobal(double q_bits, double p);

// Upper bound after k-qubit local depolarizing noise:
// log2(p^k + (1 - p^k) 2^q).
absl::StatusOr<double> NoisyLeakageLocalBound(double q_bits, double p, int k);

}  // namespace qleak

#endif  // QLEAK_LEAKAGE_ORACLES_H_
