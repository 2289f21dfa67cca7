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

#include "qleak/leakage/oracles.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "absl/strings/str_format.h"
#include "qleak/numerics/linalg.h"
#include "qleak/status.h"

namespace qleak {
namespace {

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

constexpr int kSampleChunk = 4096;

absl::Status CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return MakeError(ErrorKind::kInvalidProbability,
                     absl::StrFormat("p = %g is outside [0, 1]", p));
  }
  return absl::OkStatus();
}

absl::Status CheckBits(double q_bits) {
  if (!(q_bits >= 0.0) || !std::isfinite(q_bits)) {
    return MakeError(
        ErrorKind::kInvalidConfig,
        absl::StrFormat("leakage %g must be finite and >= 0", q_bits));
  }
  return absl::OkStatus();
}

double MaxOverlap(const std::vector<Mat2>& states, const Mat2& f) {
  double best = -1.0;
  for (const auto& rho : states) {
    best = std::max(best, (rho * f).trace().real());
  }
  return best;
}

double BestProjectiveObjective(const std::vector<Mat2>& states, int res) {
  const double pi = std::numbers::pi;
  const Complex i(0.0, 1.0);
  double best = 1.0;
  for (int a = 0; a < res; ++a) {
    const double theta = pi * a / (res - 1);
    for (int b = 0; b < 2 * res; ++b) {
      const double phi = pi * b / res;
      const double nx = std::sin(theta) * std::cos(phi);
      const double ny = std::sin(theta) * std::sin(phi);
      const double nz = std::cos(theta);
      Mat2 p;
      p << 0.5 * (1.0 + nz), 0.5 * (nx - i * ny), 0.5 * (nx + i * ny),
          0.5 * (1.0 - nz);
      const Mat2 q = Mat2::Identity() - p;
      best = std::max(best, MaxOverlap(states, p) + MaxOverlap(states, q));
    }
  }
  return best;
}

// Closed-form inverse square root of a 2x2 positive definite matrix:
// sqrt(S) = (S + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
bool InvSqrt2(const Mat2& s, Mat2* out) {
  const double det = s.determinant().real();
  const double tr = s.trace().real();
  if (!(det > 1e-14 * tr * tr)) return false;
  const double root_det = std::sqrt(det);
  const Mat2 sqrt_s =
      (s + root_det * Mat2::Identity()) / std::sqrt(tr + 2.0 * root_det);
  *out = sqrt_s.inverse();
  return true;
}

double BestSampledObjective(const std::vector<Mat2>& states, int outcomes,
                            int samples, uint64_t seed) {
  const int chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<double> chunk_best(chunks, 1.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(outcomes), static_cast<uint32_t>(c)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const int count = std::min(kSampleChunk, samples - c * kSampleChunk);
    std::vector<Vec2> g(outcomes);
    double best = 1.0;
    for (int s = 0; s < count; ++s) {
      Mat2 frame = Mat2::Zero();
      for (auto& v : g) {
        v << Complex(normal(rng), normal(rng)),
            Complex(normal(rng), normal(rng));
        frame += v * v.adjoint();
      }
      Mat2 w;
      if (!InvSqrt2(frame, &w)) continue;
      double objective = 0.0;
      for (const auto& v : g) {
        const Vec2 h = w * v;
        double top = -1.0;
        for (const auto& rho : states) {
          top = std::max(top, h.dot(rho * h).real());
        }
        objective += top;
      }
      best = std::max(best, objective);
    }
    chunk_best[c] = best;
  }
  return *std::max_element(chunk_best.begin(), chunk_best.end());
}

}  // namespace

absl::StatusOr<double> TwoStateLeakage(const DensityOperator& rho0,
                                       const DensityOperator& rho1) {
  if (rho0.dim() != rho1.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("states of dimension %d and %d",
                                     rho0.dim(), rho1.dim()));
  }
  QLEAK_ASSIGN_OR_RETURN(double t, TraceDistance(rho0.matrix(), rho1.matrix()));
  return std::log2(1.0 + t);
}

absl::StatusOr<Povm> HelstromPovm(const DensityOperator& rho0,
                                  const DensityOperator& rho1) {
  if (rho0.dim() != rho1.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     "states differ in dimension");
  }
  const int d = rho0.dim();
  QLEAK_ASSIGN_OR_RETURN(HermitianEig eig,
                         HermEig(rho0.matrix() - rho1.matrix(), true));
  CMatrix positive = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (eig.eigenvalues(i) > 0.0) positive += Outer(eig.eigenvectors.col(i));
  }
  return Povm::Create({positive, CMatrix::Identity(d, d) - positive});
}

absl::StatusOr<double> BruteForceLeakage(const Ensemble& ensemble,
                                         const BruteForceOptions& options) {
  if (ensemble.dim() != 2) {
    return MakeError(ErrorKind::kUnsupportedDimension,
                     absl::StrFormat("brute force search is qubit-only, got "
                                     "d = %d",
                                     ensemble.dim()));
  }
  if (options.grid_resolution < 16) {
    return MakeError(ErrorKind::kInvalidConfig,
                     "grid resolution must be >= 16");
  }
  if (options.random_samples < 0) {
    return MakeError(ErrorKind::kInvalidConfig, "sample count must be >= 0");
  }
  std::vector<Mat2> states;
  for (int x = 0; x < ensemble.num_symbols(); ++x) {
    states.push_back(ensemble.state(x));
  }
  double best = BestProjectiveObjective(states, options.grid_resolution);
  for (int outcomes : {3, 4}) {
    best = std::max(
        best, BestSampledObjective(states, outcomes, options.random_samples,
                                   options.seed));
  }
  return std::log2(best);
}

absl::StatusOr<double> NoisyLeakageGlobal(double q_bits, double p) {
  QLEAK_RETURN_IF_ERROR(CheckBits(q_bits));
  QLEAK_RETURN_IF_ERROR(CheckProbability(p));
  if (p == 0.0) return q_bits;
  if (p == 1.0) return 0.0;
  return std::log2(p + (1.0 - p) * std::exp2(q_bits));
}

absl::StatusOr<double> NoisyLeakageLocalBound(double q_bits, double p, int k) {
  QLEAK_RETURN_IF_ERROR(CheckBits(q_bits));
  QLEAK_RETURN_IF_ERROR(CheckProbability(p));
  if (k < 1) {
    return MakeError(ErrorKind::kInvalidConfig,
                     absl::StrFormat("qubit count %d must be >= 1", k));
  }
  const double pk = std::pow(p, k);
  if (pk == 0.0) return q_bits;
  if (pk == 1.0) return 0.0;
  return std::log2(pk + (1.0 - pk) * std::exp2(q_bits));
}

}  // namespace qleak
