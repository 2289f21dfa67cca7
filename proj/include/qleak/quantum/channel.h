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

#ifndef QLEAK_QUANTUM_CHANNEL_H_
#define QLEAK_QUANTUM_CHANNEL_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "qleak/numerics/linalg.h"
#include "qleak/quantum/state.h"

namespace qleak {

inline constexpr double kChannelTol = 1e-9;
inline constexpr int kMaxLocalQubits = 6;

// CPTP map in Kraus form: rho -> sum_j E_j rho E_j^dagger, with
// sum_j E_j^dagger E_j = I on the input space.
class KrausChannel {
 public:
  static absl::StatusOr<KrausChannel> Create(std::vector<CMatrix> kraus_ops);
  static KrausChannel Identity(int dim);

  int dim_in() const { return static_cast<int>(ops_.front().cols()); }
  int dim_out() const { return static_cast<int>(ops_.front().rows()); }
  const std::vector<CMatrix>& kraus_ops() const { return ops_; }

 private:
  explicit KrausChannel(std::vector<CMatrix> ops) : ops_(std::move(ops)) {}
  std::vector<CMatrix> ops_;
};

absl::StatusOr<DensityOperator> ApplyChannel(const KrausChannel& channel,
                                             const DensityOperator& rho);

// Maps every state of the ensemble; labels and priors are kept.
absl::StatusOr<Ensemble> ApplyChannel(const KrausChannel& channel,
                                      const Ensemble& ensemble);

// (p/d) I + (1 - p) rho, realized as {sqrt(1-p) I} U {sqrt(p/d) |i><j|}.
absl::StatusOr<KrausChannel> DepolarizingGlobal(double p, int dim);

// k-fold tensor power of the single-qubit depolarizing channel with Kraus
// set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}. Qubit 0 is the
// most significant tensor factor. Rejects k > kMaxLocalQubits.
absl::StatusOr<KrausChannel> DepolarizingLocal(double p, int num_qubits);

// Random CPTP map with `num_ops` Kraus operators: E_j = A_j T^{-1/2} where
// A_j has i.i.d. complex Gaussian entries and T = sum_j A_j^dagger A_j.
absl::StatusOr<KrausChannel> RandomKrausChannel(int dim_in, int dim_out,
                                                int num_ops, uint64_t seed);

}  // namespace qleak

#endif  // QLEAK_QUANTUM_CHANNEL_H_
