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

#ifndef QLEAK_QUANTUM_POVM_H_
#define QLEAK_QUANTUM_POVM_H_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "qleak/numerics/linalg.h"
#include "qleak/quantum/state.h"

namespace qleak {

inline constexpr double kPovmTol = 1e-8;

// Positive operator-valued measure {F_y}: PSD elements summing to identity.
class Povm {
 public:
  static absl::StatusOr<Povm> Create(std::vector<CMatrix> elements);

  // For producers that already enforced PSD and completeness themselves
  // (the ascent step repairs and checks its output). No validation.
  static Povm AssumeValid(std::vector<CMatrix> elements);

  // {|y><y|} for y in [0, dim).
  static Povm ComputationalBasis(int dim);

  int dim() const { return static_cast<int>(elements_.front().rows()); }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& element(int y) const { return elements_[y]; }

  // ||sum_y F_y - I||_max.
  double CompletenessError() const;

 private:
  explicit Povm(std::vector<CMatrix> elements)
      : elements_(std::move(elements)) {}
  std::vector<CMatrix> elements_;
};

// Checks PSD (within kPovmTol) and completeness of a candidate element list.
absl::Status ValidatePovmElements(const std::vector<CMatrix>& elements);

// Rank-one POVM from i.i.d. standard complex Gaussian vectors g_y:
// F_y = S^{-1/2} g_y g_y^dagger S^{-1/2} with S = sum_y g_y g_y^dagger.
// Deterministic per seed. Fails with DegenerateDraw when S stays
// rank-deficient after three redraws (always the case for m < d).
absl::StatusOr<Povm> RandomPovm(int dim, int num_outcomes, uint64_t seed);

// P(x, y) = Re tr(rho^x F_y), rows indexed by symbol.
absl::StatusOr<Eigen::MatrixXd> BornDistribution(const Ensemble& ensemble,
                                                 const Povm& povm);

}  // namespace qleak

#endif  // QLEAK_QUANTUM_POVM_H_
