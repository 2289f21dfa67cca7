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

#include "qleak/leakage/reference.h"

#include <cmath>

#include "qleak/status.h"

namespace qleak::reference {

double Objective(const Ensemble& ensemble, const Povm& povm,
                 std::vector<int>* argmax) {
  double total = 0.0;
  if (argmax != nullptr) argmax->assign(povm.size(), 0);
  for (int y = 0; y < povm.size(); ++y) {
    int best = 0;
    double best_value = -1.0;
    for (int x = 0; x < ensemble.num_symbols(); ++x) {
      const CMatrix product = ensemble.state(x) * povm.element(y);
      const double value = product.trace().real();
      if (x == 0 || value > best_value) {
        best = x;
        best_value = value;
      }
    }
    if (argmax != nullptr) (*argmax)[y] = best;
    total += best_value;
  }
  return total;
}

absl::StatusOr<Povm> AscentStep(const Ensemble& ensemble, const Povm& povm,
                                double step_size, double regularization) {
  if (ensemble.dim() != povm.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch, "dimension mismatch");
  }
  const int d = povm.dim();
  const int m = povm.size();
  const CMatrix identity = CMatrix::Identity(d, d);

  std::vector<int> best;
  Objective(ensemble, povm, &best);

  CMatrix lagrange = CMatrix::Zero(d, d);
  for (int z = 0; z < m; ++z)
    lagrange += ensemble.state(best[z]) * povm.element(z);

  std::vector<CMatrix> pushed;
  CMatrix s = CMatrix::Zero(d, d);
  for (int y = 0; y < m; ++y) {
    const CMatrix g =
        identity + step_size * (ensemble.state(best[y]) - lagrange);
    pushed.push_back(g.adjoint() * povm.element(y) * g);
    s += pushed.back();
  }
  s = 0.5 * (s + s.adjoint());

  // S^{-1/2} from a fresh eigendecomposition.
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(s);
  if (eig.info() != Eigen::Success) {
    return MakeError(ErrorKind::kNumericalFailure, "eigensolver failed");
  }
  const double reg = regularization * s.trace().real() / d;
  RVector scale(d);
  for (int i = 0; i < d; ++i) {
    scale(i) = 1.0 / std::sqrt(std::max(eig.eigenvalues()(i), 0.0) + reg);
  }
  CMatrix s_inv_sqrt =
      eig.eigenvectors() * scale.asDiagonal() * eig.eigenvectors().adjoint();
  s_inv_sqrt = 0.5 * (s_inv_sqrt + s_inv_sqrt.adjoint());

  CMatrix total = CMatrix::Zero(d, d);
  for (auto& f : pushed) {
    f = s_inv_sqrt * f * s_inv_sqrt;
    f = 0.5 * (f + f.adjoint());
    total += f;
  }
  const CMatrix share =
      0.5 * ((identity - total) + (identity - total).adjoint()) / m;
  for (auto& f : pushed) {
    f = 0.5 * ((f + share) + (f + share).adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> fe(f);
    if (fe.eigenvalues().minCoeff() < 0.0) {
      f = fe.eigenvectors() * fe.eigenvalues().cwiseMax(0.0).asDiagonal() *
          fe.eigenvectors().adjoint();
      f = 0.5 * (f + f.adjoint());
    }
  }
  return Povm::Create(std::move(pushed));
}

}  // namespace qleak::reference
