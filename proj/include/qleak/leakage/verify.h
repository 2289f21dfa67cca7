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

// Batch check of the structural properties maximal leakage must satisfy,
// evaluated on a concrete ensemble with the ascent optimizer:
//
//   nonnegativity       Q >= 0
//   ceiling             Q <= min(log2 |X|, 2 log2 d)
//   independence        Q == 0 exactly when all states coincide
//   povm_validity       the reported optimal POVM is a POVM
//   per_povm_dominance  I(X;Y) <= log2 sum_y max_x P[y|x] for every POVM
//   data_processing     Q(E(rho)) <= Q(rho) for a channel E
//   global_noise_exact  Q(D_p(rho)) == log2(p + (1-p) 2^Q)
//   local_noise_bound   Q(D_p^{(x)k}(rho)) <= log2(p^k + (1-p^k) 2^Q)

#ifndef QLEAK_LEAKAGE_VERIFY_H_
#define QLEAK_LEAKAGE_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "qleak/leakage/ascent.h"
#include "qleak/quantum/channel.h"
#include "qleak/quantum/state.h"

namespace qleak {

inline constexpr double kNonnegativitySlack = 1e-9;
inline constexpr double kCeilingSlack = 1e-6;
inline constexpr double kIndistinguishableTol = 1e-9;
inline constexpr double kZeroLeakageTol = 1e-6;
inline constexpr double kDominanceSlack = 1e-9;
inline constexpr double kDataProcessingSlack = 1e-3;
inline constexpr double kGlobalNoiseTol = 2e-3;
inline constexpr double kLocalBoundSlack = 1e-3;

struct VerifyOptions {
  // Channel for the data-processing check. When absent a random CPTP map is
  // drawn from `seed`.
  std::optional<KrausChannel> channel;
  // Extra noise levels to probe when the channel is a depolarizing one.
  std::optional<double> global_p;
  std::optional<double> local_p;
  std::vector<double> noise_grid = {0.2, 0.5, 0.8};
  int random_povms = 100;
  // Both sides of the data-processing comparison use at least this many
  // restarts.
  int data_processing_restarts = 20;
  uint64_t seed = 0;
  // Test hook: replaces the optimizer's POVM with a non-POVM before the
  // POVM-level checks run.
  bool corrupt_optimal_povm = false;
};

struct PropertyCheck {
  std::string name;
  bool passed = false;
  bool skipped = false;
  // Worst observed quantity and the bound it was compared against.
  double value = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct PropertyReport {
  double leakage_bits = 0.0;
  double ceiling_bits = 0.0;
  // max I(X;Y) over the probed POVMs: a lower bound on accessible
  // information.
  double accessible_information_lower_bound = 0.0;
  std::vector<PropertyCheck> checks;

  bool AllPassed() const;
  const PropertyCheck* Find(absl::string_view name) const;
};

absl::StatusOr<PropertyReport> VerifyProperties(
    const Ensemble& ensemble, const AscentConfig& config,
    const VerifyOptions& options = {});

nlohmann::json PropertyReportToJson(const PropertyReport& report);

}  // namespace qleak

#endif  // QLEAK_LEAKAGE_VERIFY_H_
