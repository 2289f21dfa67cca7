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

// Subgradient ascent over POVMs for the maximal leakage objective
//   Q = sup_F log2 sum_y max_x tr(rho^x F_y).
//
// One step fixes the maximizing symbol x*(y) for every outcome, forms
//   G_y = I + mu (rho^{x*(y)} - sum_z rho^{x*(z)} F_z),
// pushes every element through F_y -> G_y^dagger F_y G_y and renormalizes by
// S^{-1/2} (.) S^{-1/2} with S the sum of the pushed elements, which restores
// completeness. Restarts from independent random rank-one POVMs run
// concurrently; each restart is sequential.

#ifndef QLEAK_LEAKAGE_ASCENT_H_
#define QLEAK_LEAKAGE_ASCENT_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "qleak/quantum/povm.h"
#include "qleak/quantum/state.h"

namespace qleak {

inline constexpr double kMinStepSize = 1e-6;

struct AscentConfig {
  double step_size = 0.1;
  // Stop once one accepted step changes the objective by less than this.
  double epsilon = 1e-9;
  int max_iters = 10000;
  int restarts = 10;
  uint64_t seed = 0;
  // Number of POVM outcomes; 0 selects d^2.
  int povm_size = 0;
  // Halve the step until the objective does not decrease.
  bool backtracking = true;
  // S is regularized by regularization * tr(S) / d before S^{-1/2}.
  double regularization = 1e-12;
  // Restart-level parallelism; 0 selects the OpenMP default.
  int threads = 0;
};

absl::Status ValidateConfig(const AscentConfig& config, int dim);

// Resolves povm_size = 0 to d^2.
int EffectivePovmSize(const AscentConfig& config, int dim);

struct TracePoint {
  int iteration = 0;
  double objective = 0.0;
  double leakage_bits = 0.0;
  // Step size that produced this point (0 for the initial POVM).
  double step_size = 0.0;
};

using ConvergenceTrace = std::vector<TracePoint>;

struct RestartResult {
  uint64_t seed = 0;
  ConvergenceTrace trace;
  double objective = 0.0;
  double leakage_bits = 0.0;
  bool converged = false;
  int iterations = 0;
  Povm povm = Povm::ComputationalBasis(1);
};

struct LeakageReport {
  double leakage_bits = 0.0;
  double objective = 0.0;
  double ceiling_bits = 0.0;
  Povm optimal_povm = Povm::ComputationalBasis(1);
  int best_restart = 0;
  std::vector<RestartResult> restarts;

  std::vector<double> RestartLeakages() const;
  std::vector<bool> ConvergedFlags() const;
  bool AllConverged() const;
};

// One subgradient ascent update with the completeness repair applied.
// `regularization` is relative: S gets regularization * tr(S) / d.
absl::StatusOr<Povm> AscentStep(const Ensemble& ensemble, const Povm& povm,
                                double step_size, double regularization);

// Runs a single restart from RandomPovm(d, m, seed).
absl::StatusOr<RestartResult> RunRestart(const Ensemble& ensemble,
                                         const AscentConfig& config,
                                         uint64_t seed);

// Restart r is seeded with config.seed + r; the report keeps the best.
// Hitting max_iters is not an error: that restart is flagged unconverged.
absl::StatusOr<LeakageReport> ComputeLeakage(const Ensemble& ensemble,
                                             const AscentConfig& config);

}  // namespace qleak

#endif  // QLEAK_LEAKAGE_ASCENT_H_
