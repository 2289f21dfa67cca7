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

#include "qleak/leakage/verify.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "qleak/leakage/objective.h"
#include "qleak/leakage/oracles.h"
#include "qleak/quantum/ensemble_json.h"
#include "qleak/status.h"

namespace qleak {
namespace {

// Seed offsets keep the auxiliary random draws disjoint from restart seeds.
constexpr uint64_t kProbeSeedOffset = 1'000'003;
constexpr uint64_t kChannelSeedOffset = 2'000'003;
constexpr int kRandomChannelOps = 3;

std::vector<double> WithExtra(std::vector<double> grid,
                              std::optional<double> p) {
  if (p.has_value() && std::find(grid.begin(), grid.end(), *p) == grid.end()) {
    grid.push_back(*p);
  }
  return grid;
}

// Config for an ensemble derived from the original one: an explicit POVM
// size only carries over when the dimension is unchanged.
AscentConfig DerivedConfig(const AscentConfig& config, int original_dim,
                           int new_dim) {
  AscentConfig out = config;
  if (new_dim != original_dim) out.povm_size = 0;
  return out;
}

absl::StatusOr<double> Optimize(const Ensemble& ensemble,
                                const AscentConfig& config) {
  QLEAK_ASSIGN_OR_RETURN(LeakageReport report,
                         ComputeLeakage(ensemble, config));
  return report.leakage_bits;
}

PropertyCheck DominanceCheck(const Ensemble& ensemble,
                             const std::vector<Povm>& probes,
                             double* best_info) {
  PropertyCheck check;
  check.name = "per_povm_dominance";
  check.passed = true;
  check.value = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < probes.size(); ++i) {
    absl::StatusOr<ObjectiveValue> value =
        LeakageObjective(ensemble, probes[i]);
    absl::StatusOr<double> info = MutualInformation(ensemble, probes[i]);
    if (!value.ok() || !info.ok()) {
      check.passed = false;
      check.detail = absl::StrFormat(
          "probe %d is not a valid measurement: %s", i,
          (!value.ok() ? value.status() : info.status()).message());
      return check;
    }
    *best_info = std::max(*best_info, *info);
    const double margin = *info - value->leakage_bits;
    if (margin > check.value) {
      check.value = margin;
      check.detail = absl::StrFormat(
          "worst probe %d: I(X;Y) = %.9f, "
          "log2 objective = %.9f",
          i, *info, value->leakage_bits);
    }
  }
  check.bound = kDominanceSlack;
  check.passed = check.value <= kDominanceSlack;
  return check;
}

}  // namespace

bool PropertyReport::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

const PropertyCheck* PropertyReport::Find(absl::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

absl::StatusOr<PropertyReport> VerifyProperties(const Ensemble& ensemble,
                                                const AscentConfig& config,
                                                const VerifyOptions& options) {
  QLEAK_RETURN_IF_ERROR(ValidateConfig(config, ensemble.dim()));
  const int d = ensemble.dim();
  if (options.channel.has_value() && options.channel->dim_in() != d) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("channel input dim %d vs ensemble dim %d",
                                     options.channel->dim_in(), d));
  }

  QLEAK_ASSIGN_OR_RETURN(LeakageReport main, ComputeLeakage(ensemble, config));
  const double q = main.leakage_bits;
  const double q_clamped = std::max(q, 0.0);

  PropertyReport report;
  report.leakage_bits = q;
  report.ceiling_bits = main.ceiling_bits;

  report.checks.push_back({.name = "nonnegativity",
                           .passed = q >= -kNonnegativitySlack,
                           .value = q,
                           .bound = -kNonnegativitySlack,
                           .detail = absl::StrFormat("Q = %.12f bits", q)});

  report.checks.push_back({.name = "ceiling",
                           .passed = q <= main.ceiling_bits + kCeilingSlack,
                           .value = q,
                           .bound = main.ceiling_bits + kCeilingSlack,
                           .detail = absl::StrFormat("Q = %.9f, ceiling = %.9f",
                                                     q, main.ceiling_bits)});

  {
    const bool indistinguishable =
        ensemble.IsIndistinguishable(kIndistinguishableTol);
    const bool zero = q < kZeroLeakageTol;
    report.checks.push_back(
        {.name = "independence",
         .passed = indistinguishable == zero,
         .value = q,
         .bound = kZeroLeakageTol,
         .detail = absl::StrFormat("states %s, leakage %s",
                                   indistinguishable ? "identical" : "differ",
                                   zero ? "zero" : "positive")});
  }

  Povm under_test = main.optimal_povm;
  if (options.corrupt_optimal_povm) {
    std::vector<CMatrix> elements = under_test.elements();
    for (auto& f : elements) f *= 1.5;
    under_test = Povm::AssumeValid(std::move(elements));
  }
  {
    const absl::Status valid = ValidatePovmElements(under_test.elements());
    report.checks.push_back({.name = "povm_validity",
                             .passed = valid.ok(),
                             .value = under_test.CompletenessError(),
                             .bound = kPovmTol,
                             .detail = valid.ok()
                                           ? "optimal POVM is PSD and complete"
                                           : std::string(valid.message())});
  }

  {
    std::vector<Povm> probes = {under_test};
    for (int i = 0; i < options.random_povms; ++i) {
      QLEAK_ASSIGN_OR_RETURN(
          Povm probe,
          RandomPovm(d, d * d, options.seed + kProbeSeedOffset + i));
      probes.push_back(std::move(probe));
    }
    double best_info = 0.0;
    report.checks.push_back(DominanceCheck(ensemble, probes, &best_info));
    report.accessible_information_lower_bound = best_info;
  }

  {
    KrausChannel channel = KrausChannel::Identity(d);
    std::string source = "supplied channel";
    if (options.channel.has_value()) {
      channel = *options.channel;
    } else {
      QLEAK_ASSIGN_OR_RETURN(
          channel, RandomKrausChannel(d, d, kRandomChannelOps,
                                      options.seed + kChannelSeedOffset));
      source = "random channel";
    }
    QLEAK_ASSIGN_OR_RETURN(Ensemble mapped, ApplyChannel(channel, ensemble));
    AscentConfig dp_config = config;
    dp_config.restarts =
        std::max(config.restarts, options.data_processing_restarts);
    double before = q;
    if (dp_config.restarts != config.restarts) {
      QLEAK_ASSIGN_OR_RETURN(before, Optimize(ensemble, dp_config));
    }
    QLEAK_ASSIGN_OR_RETURN(
        double after,
        Optimize(mapped, DerivedConfig(dp_config, d, mapped.dim())));
    report.checks.push_back(
        {.name = "data_processing",
         .passed = after <= before + kDataProcessingSlack,
         .value = after,
         .bound = before + kDataProcessingSlack,
         .detail = absl::StrFormat("%s: before %.9f, after %.9f", source,
                                   before, after)});
  }

  if (d >= 2) {
    PropertyCheck check;
    check.name = "global_noise_exact";
    check.passed = true;
    double worst = 0.0;
    for (double p : WithExtra(options.noise_grid, options.global_p)) {
      QLEAK_ASSIGN_OR_RETURN(KrausChannel channel, DepolarizingGlobal(p, d));
      QLEAK_ASSIGN_OR_RETURN(Ensemble noisy, ApplyChannel(channel, ensemble));
      QLEAK_ASSIGN_OR_RETURN(double direct, Optimize(noisy, config));
      QLEAK_ASSIGN_OR_RETURN(double formula, NoisyLeakageGlobal(q_clamped, p));
      const double gap = std::abs(direct - formula);
      if (gap >= worst) {
        worst = gap;
        check.detail = absl::StrFormat(
            "worst p = %.3f: direct %.9f vs formula "
            "%.9f",
            p, direct, formula);
      }
    }
    check.value = worst;
    check.bound = kGlobalNoiseTol;
    check.passed = worst <= kGlobalNoiseTol;
    report.checks.push_back(std::move(check));
  } else {
    report.checks.push_back({.name = "global_noise_exact",
                             .passed = true,
                             .skipped = true,
                             .detail = "dimension 1"});
  }

  absl::StatusOr<int> qubits = QubitCount(d);
  if (qubits.ok() && *qubits <= kMaxLocalQubits) {
    PropertyCheck check;
    check.name = "local_noise_bound";
    check.passed = true;
    double worst = -std::numeric_limits<double>::infinity();
    for (double p : WithExtra(options.noise_grid, options.local_p)) {
      QLEAK_ASSIGN_OR_RETURN(KrausChannel channel,
                             DepolarizingLocal(p, *qubits));
      QLEAK_ASSIGN_OR_RETURN(Ensemble noisy, ApplyChannel(channel, ensemble));
      QLEAK_ASSIGN_OR_RETURN(double direct, Optimize(noisy, config));
      QLEAK_ASSIGN_OR_RETURN(double bound,
                             NoisyLeakageLocalBound(q_clamped, p, *qubits));
      const double excess = direct - bound;
      if (excess >= worst) {
        worst = excess;
        check.detail = absl::StrFormat(
            "tightest p = %.3f: direct %.9f vs bound "
            "%.9f",
            p, direct, bound);
      }
    }
    check.value = worst;
    check.bound = kLocalBoundSlack;
    check.passed = worst <= kLocalBoundSlack;
    report.checks.push_back(std::move(check));
  } else {
    report.checks.push_back({.name = "local_noise_bound",
                             .passed = true,
                             .skipped = true,
                             .detail = "dimension is not a power of two"});
  }
  return report;
}

nlohmann::json PropertyReportToJson(const PropertyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"skipped", c.skipped},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"detail", c.detail}});
  }
  return {{"leakage_bits", report.leakage_bits},
          {"ceiling_bits", report.ceiling_bits},
          {"accessible_information_lower_bound_bits",
           report.accessible_information_lower_bound},
          {"all_passed", report.AllPassed()},
          {"checks", std::move(checks)}};
}

}  // namespace qleak
