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

#include "qleak/numerics/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {
namespace {

absl::Status CheckSquare(const CMatrix& m, absl::string_view what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return MakeError(ErrorKind::kNonSquare,
                     absl::StrFormat("%s is %dx%d", what, m.rows(), m.cols()));
  }
  return absl::OkStatus();
}

absl::Status CheckHermitian(const CMatrix& m, absl::string_view what) {
  const double residual = HermitianResidual(m);
  if (residual > kHermitianTol) {
    return MakeError(
        ErrorKind::kNotHermitian,
        absl::StrFormat("%s has relative asymmetry %.3e", what, residual));
  }
  return absl::OkStatus();
}

}  // namespace

bool AllFinite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double HermitianResidual(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() / scale;
}

CMatrix Hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

absl::StatusOr<HermitianEig> HermEig(const CMatrix& m, bool symmetrize) {
  QLEAK_RETURN_IF_ERROR(CheckSquare(m, "matrix"));
  if (!AllFinite(m)) {
    return MakeError(ErrorKind::kNonFinite, "matrix has NaN or Inf entries");
  }
  if (!symmetrize) QLEAK_RETURN_IF_ERROR(CheckHermitian(m, "matrix"));

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(Hermitize(m));
  if (solver.info() != Eigen::Success) {
    return MakeError(ErrorKind::kNumericalFailure,
                     "Hermitian eigensolver did not converge");
  }
  // Eigen sorts ascending.
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

absl::StatusOr<RVector> HermEigenvalues(const CMatrix& m) {
  QLEAK_RETURN_IF_ERROR(CheckSquare(m, "matrix"));
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(Hermitize(m),
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return MakeError(ErrorKind::kNumericalFailure,
                     "Hermitian eigensolver did not converge");
  }
  return RVector(solver.eigenvalues().reverse());
}

double DefaultInvSqrtReg(const CMatrix& s) {
  return 1e-12 * s.trace().real() / static_cast<double>(s.rows());
}

absl::StatusOr<CMatrix> InvSqrtPsd(const CMatrix& s, double reg) {
  QLEAK_RETURN_IF_ERROR(CheckSquare(s, "operator"));
  QLEAK_ASSIGN_OR_RETURN(HermitianEig eig, HermEig(s));
  if (eig.eigenvalues.minCoeff() < -kPsdTol) {
    return MakeError(ErrorKind::kNotPsd,
                     absl::StrFormat("smallest eigenvalue %.3e",
                                     eig.eigenvalues.minCoeff()));
  }
  if (!(reg > 0.0)) reg = std::numeric_limits<double>::min();
  RVector scale(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < scale.size(); ++i) {
    scale(i) = 1.0 / std::sqrt(std::max(eig.eigenvalues(i), 0.0) + reg);
  }
  const CMatrix& v = eig.eigenvectors;
  CMatrix out = v * scale.asDiagonal() * v.adjoint();
  return Hermitize(out);
}

absl::StatusOr<Complex> TraceProduct(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("cannot trace %dx%d times %dx%d", a.rows(),
                                     a.cols(), b.rows(), b.cols()));
  }
  return TraceProductUnchecked(a, b);
}

Complex TraceProductUnchecked(const CMatrix& a, const CMatrix& b) {
  // sum_ij a_ij b_ji == sum over elementwise product of a and b^T.
  return a.cwiseProduct(b.transpose()).sum();
}

CMatrix TensorProduct(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

absl::StatusOr<double> TraceDistance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     "trace distance needs equal shapes");
  }
  QLEAK_RETURN_IF_ERROR(CheckSquare(a, "first operand"));
  QLEAK_RETURN_IF_ERROR(CheckHermitian(a, "first operand"));
  QLEAK_RETURN_IF_ERROR(CheckHermitian(b, "second operand"));
  QLEAK_ASSIGN_OR_RETURN(RVector lambda, HermEigenvalues(a - b));
  // Sum in a fixed order so T(a, b) == T(b, a) bit for bit.
  std::vector<double> magnitudes(lambda.data(), lambda.data() + lambda.size());
  for (double& v : magnitudes) v = std::abs(v);
  std::sort(magnitudes.begin(), magnitudes.end());
  double sum = 0.0;
  for (double v : magnitudes) sum += v;
  return 0.5 * sum;
}

CMatrix Outer(const CVector& v) { return v * v.adjoint(); }

}  // namespace qleak
