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

#include "qleak/quantum/channel.h"

#include <cmath>
#include <random>

#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {
namespace {

constexpr double kTracePreservationTol = 1e-10;

absl::Status CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return MakeError(ErrorKind::kInvalidProbability,
                     absl::StrFormat("p = %g is outside [0, 1]", p));
  }
  return absl::OkStatus();
}

std::vector<CMatrix> PauliKraus(double p) {
  const Complex i(0.0, 1.0);
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const double a = std::sqrt(std::max(0.0, 1.0 - 0.75 * p));
  const double b = std::sqrt(0.25 * p);
  return {a * id, b * x, b * y, b * z};
}

}  // namespace

absl::StatusOr<KrausChannel> KrausChannel::Create(
    std::vector<CMatrix> kraus_ops) {
  if (kraus_ops.empty()) {
    return MakeError(ErrorKind::kInvalidChannel, "no Kraus operators");
  }
  const Eigen::Index rows = kraus_ops.front().rows();
  const Eigen::Index cols = kraus_ops.front().cols();
  if (rows == 0 || cols == 0) {
    return MakeError(ErrorKind::kInvalidChannel, "empty Kraus operator");
  }
  CMatrix total = CMatrix::Zero(cols, cols);
  for (size_t j = 0; j < kraus_ops.size(); ++j) {
    const CMatrix& e = kraus_ops[j];
    if (e.rows() != rows || e.cols() != cols) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrFormat("Kraus operator %d is %dx%d, expected "
                                       "%dx%d",
                                       j, e.rows(), e.cols(), rows, cols));
    }
    if (!AllFinite(e)) {
      return MakeError(ErrorKind::kNonFinite,
                       absl::StrFormat("Kraus operator %d has NaN or Inf", j));
    }
    total.noalias() += e.adjoint() * e;
  }
  const double err =
      (total - CMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (err > kChannelTol) {
    return MakeError(ErrorKind::kInvalidChannel,
                     absl::StrFormat("sum E^dagger E deviates from identity by "
                                     "%.3e",
                                     err));
  }
  return KrausChannel(std::move(kraus_ops));
}

KrausChannel KrausChannel::Identity(int dim) {
  return KrausChannel({CMatrix::Identity(dim, dim)});
}

absl::StatusOr<DensityOperator> ApplyChannel(const KrausChannel& channel,
                                             const DensityOperator& rho) {
  if (channel.dim_in() != rho.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("channel input dim %d vs state dim %d",
                                     channel.dim_in(), rho.dim()));
  }
  CMatrix out = CMatrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& e : channel.kraus_ops()) {
    out.noalias() += e * rho.matrix() * e.adjoint();
  }
  const double drift = std::abs(out.trace().real() - 1.0);
  if (drift > kTracePreservationTol) {
    return MakeError(ErrorKind::kInvalidChannel,
                     absl::StrFormat("channel changed trace by %.3e", drift));
  }
  return DensityOperator::Create(out);
}

absl::StatusOr<Ensemble> ApplyChannel(const KrausChannel& channel,
                                      const Ensemble& ensemble) {
  std::vector<DensityOperator> mapped;
  mapped.reserve(ensemble.num_symbols());
  for (const auto& rho : ensemble.states()) {
    QLEAK_ASSIGN_OR_RETURN(DensityOperator out, ApplyChannel(channel, rho));
    mapped.push_back(std::move(out));
  }
  return Ensemble::Create(ensemble.labels(), ensemble.priors(),
                          std::move(mapped));
}

absl::StatusOr<KrausChannel> DepolarizingGlobal(double p, int dim) {
  QLEAK_RETURN_IF_ERROR(CheckProbability(p));
  if (dim < 2) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("depolarizing needs d >= 2, got %d", dim));
  }
  std::vector<CMatrix> ops;
  ops.reserve(1 + dim * dim);
  ops.push_back(std::sqrt(1.0 - p) * CMatrix::Identity(dim, dim));
  const double amp = std::sqrt(p / dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      CMatrix e = CMatrix::Zero(dim, dim);
      e(i, j) = amp;
      ops.push_back(std::move(e));
    }
  }
  return KrausChannel::Create(std::move(ops));
}

absl::StatusOr<KrausChannel> DepolarizingLocal(double p, int num_qubits) {
  QLEAK_RETURN_IF_ERROR(CheckProbability(p));
  if (num_qubits < 1) {
    return MakeError(
        ErrorKind::kInvalidConfig,
        absl::StrFormat("need at least one qubit, got %d", num_qubits));
  }
  if (num_qubits > kMaxLocalQubits) {
    return MakeError(
        ErrorKind::kDimensionOverflow,
        absl::StrFormat("%d qubits would need 4^%d Kraus operators", num_qubits,
                        num_qubits));
  }
  const std::vector<CMatrix> single = PauliKraus(p);
  std::vector<CMatrix> ops = single;
  for (int q = 1; q < num_qubits; ++q) {
    std::vector<CMatrix> next;
    next.reserve(ops.size() * single.size());
    for (const auto& a : ops) {
      for (const auto& b : single) next.push_back(TensorProduct(a, b));
    }
    ops = std::move(next);
  }
  return KrausChannel::Create(std::move(ops));
}

absl::StatusOr<KrausChannel> RandomKrausChannel(int dim_in, int dim_out,
                                                int num_ops, uint64_t seed) {
  if (dim_in < 1 || dim_out < 1 || num_ops < 1) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "random channel needs positive dimensions and op count");
  }
  // sum_j A_j^dagger A_j has rank at most num_ops * dim_out.
  if (num_ops * dim_out < dim_in) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("%d Kraus operators of %dx%d cannot be "
                                     "trace preserving",
                                     num_ops, dim_out, dim_in));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<CMatrix> ops(num_ops, CMatrix(dim_out, dim_in));
  CMatrix t = CMatrix::Zero(dim_in, dim_in);
  for (auto& a : ops) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      a.data()[i] = Complex(normal(rng), normal(rng));
    }
    t.noalias() += a.adjoint() * a;
  }
  // Full rank almost surely given the guard above. Unregularized so the
  // result is trace preserving to rounding.
  QLEAK_ASSIGN_OR_RETURN(CMatrix t_inv_sqrt, InvSqrtPsd(t, 0.0));
  for (auto& a : ops) a = a * t_inv_sqrt;
  return KrausChannel::Create(std::move(ops));
}

}  // namespace qleak
