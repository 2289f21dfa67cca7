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

#include "qleak/quantum/state.h"

#include <cmath>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {

absl::StatusOr<DensityOperator> DensityOperator::Create(const CMatrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    return MakeError(ErrorKind::kNonSquare,
                     absl::StrFormat("density matrix is %dx%d", matrix.rows(),
                                     matrix.cols()));
  }
  if (!AllFinite(matrix)) {
    return MakeError(ErrorKind::kNonFinite, "density matrix has NaN or Inf");
  }
  const double residual = HermitianResidual(matrix);
  if (residual > kHermitianTol) {
    return MakeError(
        ErrorKind::kNotHermitian,
        absl::StrFormat("density matrix asymmetry %.3e", residual));
  }
  CMatrix rho = Hermitize(matrix);
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    return MakeError(ErrorKind::kInvalidDensity,
                     absl::StrFormat("trace %.12g is not 1", trace));
  }
  QLEAK_ASSIGN_OR_RETURN(RVector lambda, HermEigenvalues(rho));
  if (lambda.minCoeff() < -kPsdTol) {
    return MakeError(ErrorKind::kNotPsd,
                     absl::StrFormat("density matrix has eigenvalue %.3e",
                                     lambda.minCoeff()));
  }
  return DensityOperator(std::move(rho));
}

absl::StatusOr<DensityOperator> DensityOperator::FromPureState(const CVector& v,
                                                               bool normalize) {
  if (v.size() == 0) {
    return MakeError(ErrorKind::kInvalidDensity, "empty state vector");
  }
  const double norm = v.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    return MakeError(ErrorKind::kInvalidDensity, "state vector has zero norm");
  }
  if (!normalize && std::abs(norm - 1.0) > kTraceTol) {
    return MakeError(ErrorKind::kInvalidDensity,
                     absl::StrFormat("state vector norm %.12g is not 1", norm));
  }
  return Create(Outer(v / norm));
}

DensityOperator DensityOperator::BasisState(int dim, int index) {
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(index, index) = 1.0;
  return DensityOperator(std::move(rho));
}

DensityOperator DensityOperator::MaximallyMixed(int dim) {
  return DensityOperator(CMatrix::Identity(dim, dim) /
                         static_cast<double>(dim));
}

absl::StatusOr<Ensemble> Ensemble::Create(std::vector<std::string> labels,
                                          std::vector<double> priors,
                                          std::vector<DensityOperator> states) {
  if (states.empty()) {
    return MakeError(ErrorKind::kInvalidEnsemble, "ensemble has no symbols");
  }
  if (labels.size() != states.size()) {
    return MakeError(ErrorKind::kInvalidEnsemble,
                     absl::StrFormat("%d labels for %d states", labels.size(),
                                     states.size()));
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      return MakeError(ErrorKind::kInvalidEnsemble,
                       absl::StrCat("symbol '", label, "': duplicate label"));
    }
  }
  const int dim = states.front().dim();
  for (size_t x = 0; x < states.size(); ++x) {
    if (states[x].dim() != dim) {
      return MakeError(
          ErrorKind::kDimensionMismatch,
          absl::StrFormat("symbol '%s': state dimension %d, expected %d",
                          labels[x], states[x].dim(), dim));
    }
  }
  if (priors.empty()) {
    priors.assign(states.size(), 1.0 / static_cast<double>(states.size()));
  }
  if (priors.size() != states.size()) {
    return MakeError(ErrorKind::kInvalidEnsemble,
                     absl::StrFormat("%d priors for %d states", priors.size(),
                                     states.size()));
  }
  double total = 0.0;
  for (size_t x = 0; x < priors.size(); ++x) {
    if (!(priors[x] > 0.0) || !std::isfinite(priors[x])) {
      return MakeError(ErrorKind::kInvalidEnsemble,
                       absl::StrFormat("symbol '%s': prior %g must be positive",
                                       labels[x], priors[x]));
    }
    total += priors[x];
  }
  if (std::abs(total - 1.0) > kPriorSumTol) {
    return MakeError(ErrorKind::kInvalidEnsemble,
                     absl::StrFormat("priors sum to %.15g", total));
  }
  return Ensemble(dim, std::move(labels), std::move(priors), std::move(states));
}

CMatrix Ensemble::AveragedState() const {
  CMatrix avg = CMatrix::Zero(dim_, dim_);
  for (int x = 0; x < num_symbols(); ++x) avg += priors_[x] * state(x);
  return avg;
}

bool Ensemble::IsIndistinguishable(double tol) const {
  for (int x = 1; x < num_symbols(); ++x) {
    if ((state(x) - state(0)).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

absl::StatusOr<Ensemble> Ensemble::WithPriors(
    std::vector<double> priors) const {
  return Create(labels_, std::move(priors), states_);
}

}  // namespace qleak
