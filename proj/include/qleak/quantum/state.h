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

#ifndef QLEAK_QUANTUM_STATE_H_
#define QLEAK_QUANTUM_STATE_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "qleak/numerics/linalg.h"

namespace qleak {

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPriorSumTol = 1e-12;

// Hermitian, PSD, unit-trace d x d matrix. Only constructible through
// Create, which validates and stores the Hermitian part of its input.
class DensityOperator {
 public:
  static absl::StatusOr<DensityOperator> Create(const CMatrix& matrix);
  // |v><v| / <v|v> when `normalize`; otherwise v must be unit norm.
  static absl::StatusOr<DensityOperator> FromPureState(const CVector& v,
                                                       bool normalize);
  static DensityOperator BasisState(int dim, int index);
  static DensityOperator MaximallyMixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityOperator(CMatrix matrix) : matrix_(std::move(matrix)) {}
  CMatrix matrix_;
};

// Classical-quantum ensemble {p_X(x), rho^x}. Symbols keep their input order
// and are addressed by dense index everywhere downstream.
class Ensemble {
 public:
  // Empty `priors` means uniform. Errors name the offending symbol label.
  static absl::StatusOr<Ensemble> Create(std::vector<std::string> labels,
                                         std::vector<double> priors,
                                         std::vector<DensityOperator> states);

  int dim() const { return dim_; }
  int num_symbols() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& priors() const { return priors_; }
  const std::vector<DensityOperator>& states() const { return states_; }
  const CMatrix& state(int x) const { return states_[x].matrix(); }

  // rho_A = sum_x p_X(x) rho^x.
  CMatrix AveragedState() const;

  // True when every pair of states agrees entrywise within `tol`.
  bool IsIndistinguishable(double tol) const;

  // Same states, different priors.
  absl::StatusOr<Ensemble> WithPriors(std::vector<double> priors) const;

 private:
  Ensemble(int dim, std::vector<std::string> labels, std::vector<double> priors,
           std::vector<DensityOperator> states)
      : dim_(dim),
        labels_(std::move(labels)),
        priors_(std::move(priors)),
        states_(std::move(states)) {}

  int dim_;
  std::vector<std::string> labels_;
  std::vector<double> priors_;
  std::vector<DensityOperator> states_;
};

}  // namespace qleak

#endif  // QLEAK_QUANTUM_STATE_H_
