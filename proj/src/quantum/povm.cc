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

#include "qleak/quantum/povm.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {
namespace {

constexpr int kMaxDrawAttempts = 4;  // first draw plus three retries
// S counts as rank-deficient below this fraction of its largest eigenvalue.
constexpr double kDegenerateRatio = 1e-10;
constexpr double kBornImagTol = 1e-9;
constexpr double kBornRangeTol = 1e-9;

}  // namespace

absl::Status ValidatePovmElements(const std::vector<CMatrix>& elements) {
  if (elements.empty()) {
    return MakeError(ErrorKind::kInvalidPovm, "POVM has no elements");
  }
  const Eigen::Index d = elements.front().rows();
  CMatrix total = CMatrix::Zero(d, d);
  for (size_t y = 0; y < elements.size(); ++y) {
    const CMatrix& f = elements[y];
    if (f.rows() != d || f.cols() != d) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrFormat("element %d is %dx%d, expected %dx%d", y,
                                       f.rows(), f.cols(), d, d));
    }
    if (!AllFinite(f)) {
      return MakeError(ErrorKind::kNonFinite,
                       absl::StrFormat("element %d has NaN or Inf", y));
    }
    if (HermitianResidual(f) > kPovmTol) {
      return MakeError(ErrorKind::kInvalidPovm,
                       absl::StrFormat("element %d is not Hermitian", y));
    }
    QLEAK_ASSIGN_OR_RETURN(RVector lambda, HermEigenvalues(f));
    if (lambda.minCoeff() < -kPovmTol) {
      return MakeError(ErrorKind::kInvalidPovm,
                       absl::StrFormat("element %d has eigenvalue %.3e", y,
                                       lambda.minCoeff()));
    }
    total += f;
  }
  const double err = (total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > kPovmTol) {
    return MakeError(
        ErrorKind::kInvalidPovm,
        absl::StrFormat("elements sum to identity only within %.3e", err));
  }
  return absl::OkStatus();
}

absl::StatusOr<Povm> Povm::Create(std::vector<CMatrix> elements) {
  QLEAK_RETURN_IF_ERROR(ValidatePovmElements(elements));
  for (auto& f : elements) f = Hermitize(f);
  return Povm(std::move(elements));
}

Povm Povm::AssumeValid(std::vector<CMatrix> elements) {
  return Povm(std::move(elements));
}

Povm Povm::ComputationalBasis(int dim) {
  std::vector<CMatrix> elements;
  elements.reserve(dim);
  for (int y = 0; y < dim; ++y) {
    CMatrix f = CMatrix::Zero(dim, dim);
    f(y, y) = 1.0;
    elements.push_back(std::move(f));
  }
  return Povm(std::move(elements));
}

double Povm::CompletenessError() const {
  CMatrix total = CMatrix::Zero(dim(), dim());
  for (const auto& f : elements_) total += f;
  return (total - CMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

absl::StatusOr<Povm> RandomPovm(int dim, int num_outcomes, uint64_t seed) {
  if (dim < 1 || num_outcomes < 1) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("random POVM needs dim >= 1 and m >= 1, "
                                     "got dim=%d m=%d",
                                     dim, num_outcomes));
  }
  std::mt19937_64 rng(seed);
  // Standard complex Gaussian: real and imaginary parts each N(0, 1/2).
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

  for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
    std::vector<CMatrix> raw;
    raw.reserve(num_outcomes);
    CMatrix s = CMatrix::Zero(dim, dim);
    for (int y = 0; y < num_outcomes; ++y) {
      CVector g(dim);
      for (int i = 0; i < dim; ++i) g(i) = Complex(normal(rng), normal(rng));
      raw.push_back(Outer(g));
      s += raw.back();
    }
    QLEAK_ASSIGN_OR_RETURN(RVector lambda, HermEigenvalues(s));
    if (lambda.minCoeff() <= kDegenerateRatio * lambda.maxCoeff()) continue;

    // Conditioning was checked above, so no regularizer; it would bias the
    // completeness by about reg / lambda_min.
    QLEAK_ASSIGN_OR_RETURN(CMatrix s_inv_sqrt, InvSqrtPsd(s, 0.0));
    for (auto& f : raw) f = Hermitize(s_inv_sqrt * f * s_inv_sqrt);
    return Povm::AssumeValid(std::move(raw));
  }
  return MakeError(ErrorKind::kDegenerateDraw,
                   absl::StrFormat("frame operator stayed rank-deficient for "
                                   "d=%d m=%d after %d draws",
                                   dim, num_outcomes, kMaxDrawAttempts));
}

absl::StatusOr<Eigen::MatrixXd> BornDistribution(const Ensemble& ensemble,
                                                 const Povm& povm) {
  if (ensemble.dim() != povm.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("ensemble dim %d vs POVM dim %d",
                                     ensemble.dim(), povm.dim()));
  }
  const int nx = ensemble.num_symbols();
  const int ny = povm.size();
  Eigen::MatrixXd probs(nx, ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const Complex t =
          TraceProductUnchecked(ensemble.state(x), povm.element(y));
      if (std::abs(t.imag()) > kBornImagTol) {
        return MakeError(
            ErrorKind::kImaginaryLeak,
            absl::StrFormat("tr(rho^%s F_%d) has imaginary part %.3e",
                            ensemble.labels()[x], y, t.imag()));
      }
      if (t.real() < -kBornRangeTol || t.real() > 1.0 + kBornRangeTol) {
        return MakeError(
            ErrorKind::kNumericalFailure,
            absl::StrFormat("probability %.12g outside [0, 1]", t.real()));
      }
      probs(x, y) = std::clamp(t.real(), 0.0, 1.0);
    }
    const double row = probs.row(x).sum();
    if (std::abs(row - 1.0) > kPovmTol) {
      return MakeError(ErrorKind::kNumericalFailure,
                       absl::StrFormat("outcome probabilities for '%s' sum to "
                                       "%.12g",
                                       ensemble.labels()[x], row));
    }
  }
  return probs;
}

}  // namespace qleak
