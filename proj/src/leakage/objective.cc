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

#include "qleak/leakage/objective.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {
namespace {

// Below this many flops per call the OpenMP fork costs more than it saves.
constexpr long kParallelWork = 1 << 14;

absl::Status CheckDims(const Ensemble& ensemble, const Povm& povm) {
  if (ensemble.dim() != povm.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("ensemble dim %d vs POVM dim %d",
                                     ensemble.dim(), povm.dim()));
  }
  return absl::OkStatus();
}

}  // namespace

Eigen::MatrixXd OverlapTable(const Ensemble& ensemble, const Povm& povm) {
  const int ny = povm.size();
  const int nx = ensemble.num_symbols();
  const long work =
      static_cast<long>(ny) * nx * ensemble.dim() * ensemble.dim();
  Eigen::MatrixXd table(ny, nx);
#pragma omp parallel for schedule(static) if (work >= kParallelWork)
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      table(y, x) =
          TraceProductUnchecked(ensemble.state(x), povm.element(y)).real();
    }
  }
  return table;
}

absl::StatusOr<ObjectiveValue> LeakageObjective(const Ensemble& ensemble,
                                                const Povm& povm) {
  QLEAK_RETURN_IF_ERROR(CheckDims(ensemble, povm));
  const Eigen::MatrixXd table = OverlapTable(ensemble, povm);
  ObjectiveValue out;
  out.argmax.resize(table.rows());
  for (Eigen::Index y = 0; y < table.rows(); ++y) {
    int best = 0;
    for (Eigen::Index x = 1; x < table.cols(); ++x) {
      if (table(y, x) > table(y, best)) best = static_cast<int>(x);
    }
    out.argmax[y] = best;
    out.objective += table(y, best);
  }
  out.leakage_bits = std::log2(out.objective);
  return out;
}

absl::StatusOr<double> MutualInformation(const Ensemble& ensemble,
                                         const Povm& povm) {
  QLEAK_RETURN_IF_ERROR(CheckDims(ensemble, povm));
  QLEAK_ASSIGN_OR_RETURN(Eigen::MatrixXd cond,
                         BornDistribution(ensemble, povm));
  const int nx = ensemble.num_symbols();
  Eigen::VectorXd p_y = Eigen::VectorXd::Zero(cond.cols());
  for (int x = 0; x < nx; ++x)
    p_y += ensemble.priors()[x] * cond.row(x).transpose();
  double info = 0.0;
  for (int x = 0; x < nx; ++x) {
    for (Eigen::Index y = 0; y < cond.cols(); ++y) {
      const double joint = ensemble.priors()[x] * cond(x, y);
      if (joint <= 0.0) continue;
      info += joint * std::log2(cond(x, y) / p_y(y));
    }
  }
  return std::max(info, 0.0);
}

double CeilingBits(const Ensemble& ensemble) {
  return std::min(std::log2(static_cast<double>(ensemble.num_symbols())),
                  2.0 * std::log2(static_cast<double>(ensemble.dim())));
}

}  // namespace qleak
