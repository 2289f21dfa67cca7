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

#include "qleak/leakage/ascent.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "absl/strings/str_format.h"
#include "qleak/leakage/objective.h"
#include "qleak/status.h"

namespace qleak {
namespace {

constexpr long kParallelWork = 1 << 14;

// Returns the first non-OK status in index order so failures are
// reproducible regardless of thread scheduling.
absl::Status FirstError(const std::vector<absl::Status>& statuses) {
  for (const auto& s : statuses) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

// Spreads I - sum_y F_y evenly over the elements, then clamps negative
// eigenvalues of each element to zero.
absl::Status RepairCompleteness(std::vector<CMatrix>& elements, bool parallel) {
  const int m = static_cast<int>(elements.size());
  const Eigen::Index d = elements.front().rows();
  CMatrix residual = CMatrix::Identity(d, d);
  for (const auto& f : elements) residual -= f;
  residual = Hermitize(residual) / static_cast<double>(m);

  std::vector<absl::Status> statuses(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < m; ++y) {
    CMatrix f = Hermitize(elements[y] + residual);
    // Pivoted LDLT has the inertia of f up to rounding, at a fraction of the
    // cost of an eigensolve. Only indefinite elements need the clamp.
    Eigen::LDLT<CMatrix> ldlt(f);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
      elements[y] = std::move(f);
      continue;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(f);
    if (solver.info() != Eigen::Success) {
      statuses[y] = MakeError(ErrorKind::kNumericalFailure,
                              "eigensolver failed during POVM repair");
      continue;
    }
    if (solver.eigenvalues().minCoeff() < 0.0) {
      const RVector clamped = solver.eigenvalues().cwiseMax(0.0);
      f = solver.eigenvectors() * clamped.asDiagonal() *
          solver.eigenvectors().adjoint();
      f = Hermitize(f);
    }
    elements[y] = std::move(f);
  }
  QLEAK_RETURN_IF_ERROR(FirstError(statuses));

  CMatrix total = CMatrix::Zero(d, d);
  for (const auto& f : elements) total += f;
  const double err = (total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(err <= kPovmTol)) {
    return MakeError(
        ErrorKind::kNumericalFailure,
        absl::StrFormat("ascent step lost completeness (%.3e)", err));
  }
  return absl::OkStatus();
}

}  // namespace

std::vector<double> LeakageReport::RestartLeakages() const {
  std::vector<double> out;
  for (const auto& r : restarts) out.push_back(r.leakage_bits);
  return out;
}

std::vector<bool> LeakageReport::ConvergedFlags() const {
  std::vector<bool> out;
  for (const auto& r : restarts) out.push_back(r.converged);
  return out;
}

bool LeakageReport::AllConverged() const {
  return std::all_of(restarts.begin(), restarts.end(),
                     [](const RestartResult& r) { return r.converged; });
}

int EffectivePovmSize(const AscentConfig& config, int dim) {
  return config.povm_size > 0 ? config.povm_size : dim * dim;
}

absl::Status ValidateConfig(const AscentConfig& config, int dim) {
  auto bad = [](std::string msg) {
    return MakeError(ErrorKind::kInvalidConfig, msg);
  };
  if (!(config.step_size > 0.0 && config.step_size <= 10.0)) {
    return bad(
        absl::StrFormat("step size %g outside (0, 10]", config.step_size));
  }
  if (!(config.epsilon > 0.0)) {
    return bad(absl::StrFormat("epsilon %g must be positive", config.epsilon));
  }
  if (config.max_iters < 1) return bad("max_iters must be >= 1");
  if (config.restarts < 1) return bad("restarts must be >= 1");
  if (!(config.regularization > 0.0)) return bad("regularization must be > 0");
  if (config.povm_size < 0) return bad("POVM size must be positive");
  if (config.threads < 0) return bad("threads must be >= 0");
  const int m = EffectivePovmSize(config, dim);
  if (m < dim) {
    return bad(
        absl::StrFormat("POVM size %d below dimension %d; random "
                        "initialization needs m >= d",
                        m, dim));
  }
  return absl::OkStatus();
}

namespace {

// One step from `povm` given its argmax x*(y). Inputs are already checked.
absl::StatusOr<Povm> StepFrom(const Ensemble& ensemble, const Povm& povm,
                              const std::vector<int>& best, double step_size,
                              double regularization) {
  const int m = povm.size();
  const int d = povm.dim();
  const bool parallel = static_cast<long>(m) * d * d * d >= kParallelWork;

  // sum_z rho^{x*(z)} F_z; summed serially so the result is independent of
  // the thread count.
  std::vector<CMatrix> weighted(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (int z = 0; z < m; ++z) {
    weighted[z] = ensemble.state(best[z]) * povm.element(z);
  }
  CMatrix lagrange = CMatrix::Zero(d, d);
  for (const auto& w : weighted) lagrange += w;

  std::vector<CMatrix> pushed(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < m; ++y) {
    CMatrix g = CMatrix::Identity(d, d);
    g += step_size * (ensemble.state(best[y]) - lagrange);
    pushed[y] = g.adjoint() * povm.element(y) * g;
  }
  CMatrix s = CMatrix::Zero(d, d);
  for (const auto& f : pushed) s += f;
  s = Hermitize(s);

  QLEAK_ASSIGN_OR_RETURN(CMatrix s_inv_sqrt,
                         InvSqrtPsd(s, regularization * s.trace().real() /
                                           static_cast<double>(d)));

#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < m; ++y) {
    pushed[y] = Hermitize(s_inv_sqrt * pushed[y] * s_inv_sqrt);
  }
  QLEAK_RETURN_IF_ERROR(RepairCompleteness(pushed, parallel));
  return Povm::AssumeValid(std::move(pushed));
}

}  // namespace

absl::StatusOr<Povm> AscentStep(const Ensemble& ensemble, const Povm& povm,
                                double step_size, double regularization) {
  if (ensemble.dim() != povm.dim()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("ensemble dim %d vs POVM dim %d",
                                     ensemble.dim(), povm.dim()));
  }
  if (!(step_size > 0.0)) {
    return MakeError(ErrorKind::kInvalidConfig, "step size must be positive");
  }
  QLEAK_ASSIGN_OR_RETURN(ObjectiveValue current,
                         LeakageObjective(ensemble, povm));
  return StepFrom(ensemble, povm, current.argmax, step_size, regularization);
}

absl::StatusOr<RestartResult> RunRestart(const Ensemble& ensemble,
                                         const AscentConfig& config,
                                         uint64_t seed) {
  QLEAK_RETURN_IF_ERROR(ValidateConfig(config, ensemble.dim()));
  const int m = EffectivePovmSize(config, ensemble.dim());
  QLEAK_ASSIGN_OR_RETURN(Povm povm, RandomPovm(ensemble.dim(), m, seed));
  QLEAK_ASSIGN_OR_RETURN(ObjectiveValue value,
                         LeakageObjective(ensemble, povm));

  RestartResult result;
  result.seed = seed;
  result.trace.push_back({0, value.objective, value.leakage_bits, 0.0});

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    double mu = config.step_size;
    std::optional<Povm> next;
    ObjectiveValue next_value;
    while (true) {
      QLEAK_ASSIGN_OR_RETURN(
          Povm candidate,
          StepFrom(ensemble, povm, value.argmax, mu, config.regularization));
      QLEAK_ASSIGN_OR_RETURN(ObjectiveValue cv,
                             LeakageObjective(ensemble, candidate));
      if (!config.backtracking || cv.objective >= value.objective) {
        next = std::move(candidate);
        next_value = std::move(cv);
        break;
      }
      mu *= 0.5;
      if (mu < kMinStepSize) break;
    }
    result.iterations = iter;
    if (!next.has_value()) {
      // No step down to the minimal step size improves: the accepted change
      // is zero, which meets the termination rule.
      result.converged = true;
      break;
    }
    const double change = std::abs(next_value.objective - value.objective);
    povm = *std::move(next);
    value = std::move(next_value);
    result.trace.push_back({iter, value.objective, value.leakage_bits, mu});
    if (change < config.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.objective = value.objective;
  result.leakage_bits = value.leakage_bits;
  result.povm = std::move(povm);
  return result;
}

absl::StatusOr<LeakageReport> ComputeLeakage(const Ensemble& ensemble,
                                             const AscentConfig& config) {
  QLEAK_RETURN_IF_ERROR(ValidateConfig(config, ensemble.dim()));
  const int restarts = config.restarts;
  const int threads =
      config.threads > 0 ? config.threads : omp_get_max_threads();

  std::vector<absl::StatusOr<RestartResult>> results(
      restarts, absl::UnknownError("restart not run"));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int r = 0; r < restarts; ++r) {
    results[r] =
        RunRestart(ensemble, config, config.seed + static_cast<uint64_t>(r));
  }

  LeakageReport report;
  report.ceiling_bits = CeilingBits(ensemble);
  report.restarts.reserve(restarts);
  for (int r = 0; r < restarts; ++r) {
    if (!results[r].ok()) return results[r].status();
    report.restarts.push_back(*std::move(results[r]));
  }
  for (int r = 1; r < restarts; ++r) {
    if (report.restarts[r].leakage_bits >
        report.restarts[report.best_restart].leakage_bits) {
      report.best_restart = r;
    }
  }
  const RestartResult& best = report.restarts[report.best_restart];
  report.leakage_bits = best.leakage_bits;
  report.objective = best.objective;
  report.optimal_povm = best.povm;
  return report;
}

}  // namespace qleak
