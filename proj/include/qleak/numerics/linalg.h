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

// Dense complex linear algebra used by the quantum layer and the optimizer.
// Matrices are small (d <= 64) and dense; every routine is a pure function.

#ifndef QLEAK_NUMERICS_LINALG_H_
#define QLEAK_NUMERICS_LINALG_H_

#include <Eigen/Dense>
#include <complex>

#include "absl/status/statusor.h"

namespace qleak {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Asymmetry allowed before a matrix is rejected as non-Hermitian, measured as
// ||m - m^dagger||_F / max(1, ||m||_F).
inline constexpr double kHermitianTol = 1e-9;
// Eigenvalues down to -kPsdTol are treated as numerical zero.
inline constexpr double kPsdTol = 1e-9;

struct HermitianEig {
  RVector eigenvalues;   // descending
  CMatrix eigenvectors;  // columns, unitary
};

bool AllFinite(const CMatrix& m);

// Relative anti-Hermitian residual ||m - m^dagger||_F / max(1, ||m||_F).
double HermitianResidual(const CMatrix& m);

// (m + m^dagger) / 2.
CMatrix Hermitize(const CMatrix& m);

// Spectral decomposition of a Hermitian matrix with eigenvalues in
// descending order. With `symmetrize` the input is first replaced by its
// Hermitian part; otherwise it must already be Hermitian within
// kHermitianTol.
absl::StatusOr<HermitianEig> HermEig(const CMatrix& m, bool symmetrize = false);

// Eigenvalues only (descending). Cheaper than HermEig when vectors are not
// needed. Input is symmetrized.
absl::StatusOr<RVector> HermEigenvalues(const CMatrix& m);

// Default regularization for InvSqrtPsd: 1e-12 * tr(s) / d.
double DefaultInvSqrtReg(const CMatrix& s);

// V diag((max(lambda_i, 0) + reg)^{-1/2}) V^dagger for PSD `s`. A
// non-positive `reg` is replaced by the smallest normal double.
absl::StatusOr<CMatrix> InvSqrtPsd(const CMatrix& s, double reg);

// tr(a * b) without forming the product.
absl::StatusOr<Complex> TraceProduct(const CMatrix& a, const CMatrix& b);

// Unchecked variant for hot loops; shapes must already be compatible.
Complex TraceProductUnchecked(const CMatrix& a, const CMatrix& b);

// Kronecker product.
CMatrix TensorProduct(const CMatrix& a, const CMatrix& b);

// 1/2 sum_i |lambda_i(a - b)|.
absl::StatusOr<double> TraceDistance(const CMatrix& a, const CMatrix& b);

// |v><v|.
CMatrix Outer(const CVector& v);

}  // namespace qleak

#endif  // QLEAK_NUMERICS_LINALG_H_
