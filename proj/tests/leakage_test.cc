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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "qleak/leakage/ascent.h"
#include "qleak/leakage/objective.h"
#include "qleak/leakage/oracles.h"
#include "qleak/leakage/reference.h"
#include "qleak/leakage/verify.h"
#include "qleak/quantum/channel.h"
#include "qleak/quantum/encoders.h"
#include "qleak/quantum/povm.h"
#include "test_util.h"

namespace qleak {
namespace {

using ::qleak::testing::ErrorKindIs;
using ::qleak::testing::RandomDensity;
using ::qleak::testing::RandomPureDensity;
using ::testing::Each;
using ::testing::ElementsAre;

// 1 + sqrt(2)/2: objective of the Helstrom measurement for |0> vs |+>.
const double kZeroPlusObjective = 1.0 + std::sqrt(2.0) / 2.0;

double MaxAbs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double MaxElementGap(const Povm& a, const Povm& b) {
  double gap = 0.0;
  for (int y = 0; y < a.size(); ++y) {
    gap = std::max(gap, MaxAbs(a.element(y) - b.element(y)));
  }
  return gap;
}

DensityOperator Plus() {
  CVector v(2);
  v << 1.0, 1.0;
  return *DensityOperator::FromPureState(v, true);
}

Ensemble ZeroPlus() {
  return *Ensemble::Create({"zero", "plus"}, {},
                           {DensityOperator::BasisState(2, 0), Plus()});
}

Ensemble RandomEnsemble(int d, int symbols, std::mt19937_64& rng,
                        bool pure = false) {
  std::vector<std::string> labels;
  std::vector<DensityOperator> states;
  for (int x = 0; x < symbols; ++x) {
    labels.push_back("s" + std::to_string(x));
    states.push_back(pure ? RandomPureDensity(d, rng) : RandomDensity(d, rng));
  }
  return *Ensemble::Create(labels, {}, states);
}

AscentConfig FastConfig(int restarts = 4) {
  AscentConfig config;
  config.restarts = restarts;
  return config;
}

bool TraceIsMonotone(const ConvergenceTrace& trace, double slack) {
  for (size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].objective < trace[i - 1].objective - slack) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Objective.

TEST(LeakageObjectiveTest, IndexEncodingWithComputationalBasis) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(8));
  QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v,
                             LeakageObjective(e, Povm::ComputationalBasis(8)));
  EXPECT_DOUBLE_EQ(v.objective, 8.0);
  EXPECT_DOUBLE_EQ(v.leakage_bits, 3.0);
  EXPECT_THAT(v.argmax, ElementsAre(0, 1, 2, 3, 4, 5, 6, 7));
}

TEST(LeakageObjectiveTest, IndistinguishableEnsembleLeaksNothing) {
  std::mt19937_64 rng(1);
  const DensityOperator rho = RandomDensity(3, rng);
  const Ensemble e = *Ensemble::Create({"a", "b", "c"}, {}, {rho, rho, rho});
  for (uint64_t seed = 0; seed < 10; ++seed) {
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(3, 9, seed));
    QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v, LeakageObjective(e, f));
    EXPECT_NEAR(v.objective, 1.0, 1e-12);
    EXPECT_NEAR(v.leakage_bits, 0.0, 1e-12);
    // Every outcome ties; the smallest index wins.
    EXPECT_THAT(v.argmax, Each(0));
  }
}

TEST(LeakageObjectiveTest, HelstromMeasurementForZeroVersusPlus) {
  QLEAK_ASSERT_OK_AND_ASSIGN(
      Povm helstrom, HelstromPovm(DensityOperator::BasisState(2, 0), Plus()));
  QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v,
                             LeakageObjective(ZeroPlus(), helstrom));
  EXPECT_NEAR(v.objective, kZeroPlusObjective, 1e-12);
  EXPECT_NEAR(v.leakage_bits, 0.77155, 1e-5);
  EXPECT_THAT(v.argmax, ElementsAre(0, 1));
}

TEST(LeakageObjectiveTest, BoundedByOneAndSymbolCount) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const int nx = 1 + trial % 5;
    const Ensemble e = RandomEnsemble(d, nx, rng);
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(d, d * d, trial));
    QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v, LeakageObjective(e, f));
    EXPECT_GE(v.objective, 1.0 - 1e-8);
    EXPECT_LE(v.objective, nx + 1e-8);
  }
}

TEST(LeakageObjectiveTest, MatchesDenseReference) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 7;
    const Ensemble e = RandomEnsemble(d, 2 + trial % 4, rng);
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(d, d * d, trial));
    QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v, LeakageObjective(e, f));
    std::vector<int> argmax;
    EXPECT_NEAR(v.objective, reference::Objective(e, f, &argmax), 1e-12);
    EXPECT_EQ(v.argmax, argmax);
  }
}

TEST(LeakageObjectiveTest, DimensionMismatch) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(2));
  EXPECT_THAT(LeakageObjective(e, Povm::ComputationalBasis(3)),
              ErrorKindIs(ErrorKind::kDimensionMismatch));
}

// ---------------------------------------------------------------------------
// Ascent step.

TEST(AscentStepTest, ComputationalBasisIsAFixedPoint) {
  for (int d = 2; d <= 8; ++d) {
    QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(d));
    const Povm basis = Povm::ComputationalBasis(d);
    for (double mu : {0.01, 0.1, 0.5, 0.9}) {
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm out, AscentStep(e, basis, mu, 1e-12));
      EXPECT_LE(MaxElementGap(out, basis), 1e-10) << "d=" << d << " mu=" << mu;
    }
  }
}

TEST(AscentStepTest, VanishingStepBarelyMoves) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Ensemble e = RandomEnsemble(3, 3, rng);
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(3, 9, trial));
    for (double mu : {1e-4, 1e-6}) {
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm out, AscentStep(e, f, mu, 1e-12));
      EXPECT_LE(MaxElementGap(out, f), 10.0 * mu);
    }
  }
}

TEST(AscentStepTest, UsuallyIncreasesTheObjective) {
  std::mt19937_64 rng(5);
  int improved = 0;
  constexpr int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    const Ensemble e = RandomEnsemble(2, 2 + trial % 3, rng);
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(2, 4, trial));
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm out, AscentStep(e, f, 0.1, 1e-12));
    if (reference::Objective(e, out) >= reference::Objective(e, f)) ++improved;
  }
  EXPECT_GE(improved, 0.95 * kTrials);
}

TEST(AscentStepTest, OutputIsAPovm) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    const Ensemble e = RandomEnsemble(d, 3, rng);
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(d, d * d, trial));
    for (double mu : {0.1, 1.0, 5.0}) {
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm out, AscentStep(e, f, mu, 1e-12));
      QLEAK_EXPECT_OK(Povm::Create(out.elements()));
      EXPECT_LE(out.CompletenessError(), 1e-8);
    }
  }
}

TEST(AscentStepTest, ParallelKernelMatchesSerialReference) {
  std::mt19937_64 rng(7);
  // d = 8 with m = 64 is large enough to take the OpenMP path.
  for (int d : {2, 3, 5, 8}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Ensemble e = RandomEnsemble(d, 4, rng);
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(d, d * d, 100 + trial));
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm fast, AscentStep(e, f, 0.1, 1e-12));
      QLEAK_ASSERT_OK_AND_ASSIGN(Povm slow,
                                 reference::AscentStep(e, f, 0.1, 1e-12));
      EXPECT_LE(MaxElementGap(fast, slow), 1e-10) << "d=" << d;
    }
  }
}

TEST(AscentStepTest, Errors) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(2));
  EXPECT_THAT(AscentStep(e, Povm::ComputationalBasis(3), 0.1, 1e-12),
              ErrorKindIs(ErrorKind::kDimensionMismatch));
  EXPECT_THAT(AscentStep(e, Povm::ComputationalBasis(2), 0.0, 1e-12),
              ErrorKindIs(ErrorKind::kInvalidConfig));
}

// ---------------------------------------------------------------------------
// Full optimization.

TEST(ConfigTest, Validation) {
  EXPECT_TRUE(ValidateConfig(AscentConfig{}, 4).ok());
  AscentConfig c;
  c.step_size = 0.0;
  EXPECT_THAT(ValidateConfig(c, 2), ErrorKindIs(ErrorKind::kInvalidConfig));
  c = {};
  c.step_size = 10.5;
  EXPECT_THAT(ValidateConfig(c, 2), ErrorKindIs(ErrorKind::kInvalidConfig));
  c = {};
  c.epsilon = 0.0;
  EXPECT_THAT(ValidateConfig(c, 2), ErrorKindIs(ErrorKind::kInvalidConfig));
  c = {};
  c.restarts = 0;
  EXPECT_THAT(ValidateConfig(c, 2), ErrorKindIs(ErrorKind::kInvalidConfig));
  c = {};
  c.povm_size = 3;
  EXPECT_THAT(ValidateConfig(c, 4), ErrorKindIs(ErrorKind::kInvalidConfig));
  EXPECT_TRUE(ValidateConfig(c, 3).ok());
  EXPECT_EQ(EffectivePovmSize(AscentConfig{}, 5), 25);
}

TEST(ComputeLeakageTest, IndexEncodingReachesThreeBits) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(8));
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report,
                             ComputeLeakage(e, AscentConfig{}));
  EXPECT_NEAR(report.leakage_bits, 3.0, 1e-3);
  EXPECT_EQ(report.ceiling_bits, 3.0);
  EXPECT_TRUE(report.AllConverged());
  EXPECT_EQ(report.restarts.size(), 10u);
  for (const auto& r : report.restarts) {
    EXPECT_TRUE(TraceIsMonotone(r.trace, 1e-12));
    EXPECT_EQ(r.trace.front().iteration, 0);
  }
  EXPECT_LE(report.optimal_povm.CompletenessError(), 1e-8);
}

TEST(ComputeLeakageTest, AmplitudeEncodingNearOnePointNine) {
  QLEAK_ASSERT_OK_AND_ASSIGN(
      LeakageReport report,
      ComputeLeakage(EncodeAmplitude3Bit(), AscentConfig{}));
  EXPECT_NEAR(report.leakage_bits, 1.9, 0.05);
  for (const auto& r : report.restarts) {
    EXPECT_TRUE(TraceIsMonotone(r.trace, 1e-12));
  }
}

TEST(ComputeLeakageTest, SingleSymbolLeaksNothing) {
  std::mt19937_64 rng(8);
  const Ensemble e = RandomEnsemble(3, 1, rng);
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report,
                             ComputeLeakage(e, FastConfig()));
  EXPECT_NEAR(report.leakage_bits, 0.0, 1e-9);
  EXPECT_EQ(report.ceiling_bits, 0.0);
}

TEST(ComputeLeakageTest, ReportsBestRestart) {
  std::mt19937_64 rng(9);
  const Ensemble e = RandomEnsemble(3, 4, rng);
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report,
                             ComputeLeakage(e, FastConfig(6)));
  const std::vector<double> finals = report.RestartLeakages();
  ASSERT_EQ(finals.size(), 6u);
  EXPECT_EQ(report.leakage_bits,
            *std::max_element(finals.begin(), finals.end()));
  EXPECT_EQ(report.leakage_bits, finals[report.best_restart]);
  for (int r = 0; r < 6; ++r)
    EXPECT_EQ(report.restarts[r].seed, static_cast<uint64_t>(r));
}

TEST(ComputeLeakageTest, IterationCapFlagsUnconverged) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  AscentConfig config = FastConfig(2);
  config.max_iters = 3;
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report, ComputeLeakage(e, config));
  EXPECT_FALSE(report.AllConverged());
  for (const auto& r : report.restarts) {
    EXPECT_EQ(r.iterations, 3);
    EXPECT_EQ(r.trace.size(), 4u);
  }
}

TEST(ComputeLeakageTest, WithoutBacktrackingStillRuns) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  AscentConfig config = FastConfig(2);
  config.backtracking = false;
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report, ComputeLeakage(e, config));
  EXPECT_NEAR(report.leakage_bits, 2.0, 1e-3);
  for (const auto& r : report.restarts) {
    for (size_t i = 1; i < r.trace.size(); ++i) {
      EXPECT_EQ(r.trace[i].step_size, config.step_size);
    }
  }
}

TEST(ComputeLeakageTest, PriorsDoNotChangeTheResult) {
  for (const auto& name : {"index2", "index4"}) {
    QLEAK_ASSERT_OK_AND_ASSIGN(Preset preset, LoadPreset(name));
    const int n = preset.ensemble.num_symbols();
    std::vector<double> skewed(n, 0.1 / (n - 1));
    skewed[0] = 0.9;
    QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble other,
                               preset.ensemble.WithPriors(skewed));
    QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport a,
                               ComputeLeakage(preset.ensemble, FastConfig()));
    QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport b,
                               ComputeLeakage(other, FastConfig()));
    EXPECT_EQ(a.leakage_bits, b.leakage_bits) << name;
  }
}

TEST(ComputeLeakageTest, ThreadCountDoesNotChangeTheResult) {
  std::mt19937_64 rng(10);
  const Ensemble e = RandomEnsemble(4, 5, rng);
  AscentConfig one = FastConfig(4);
  one.threads = 1;
  AscentConfig four = one;
  four.threads = 4;
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport a, ComputeLeakage(e, one));
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport b, ComputeLeakage(e, four));
  EXPECT_EQ(a.RestartLeakages(), b.RestartLeakages());
}

TEST(ComputeLeakageTest, CeilingAndFloorHoldOnRandomEnsembles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const int nx = 1 + trial % 6;
    const Ensemble e = RandomEnsemble(d, nx, rng, trial % 2 == 0);
    AscentConfig config = FastConfig(2);
    config.seed = trial;
    QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report, ComputeLeakage(e, config));
    EXPECT_LE(report.leakage_bits, CeilingBits(e) + 1e-6);
    EXPECT_GE(report.leakage_bits, -1e-9);
    EXPECT_EQ(report.ceiling_bits,
              std::min(std::log2(static_cast<double>(nx)), 2.0 * std::log2(d)));
  }
}

TEST(ComputeLeakageTest, MatchesTwoStateClosedForm) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    const DensityOperator a =
        trial % 3 == 0 ? RandomDensity(d, rng) : RandomPureDensity(d, rng);
    const DensityOperator b = RandomPureDensity(d, rng);
    const Ensemble e = *Ensemble::Create({"a", "b"}, {}, {a, b});
    QLEAK_ASSERT_OK_AND_ASSIGN(double exact, TwoStateLeakage(a, b));
    QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report,
                               ComputeLeakage(e, FastConfig()));
    EXPECT_NEAR(report.leakage_bits, exact, 1e-3);
    // The optimizer can only ever certify achievable values.
    EXPECT_LE(report.leakage_bits, exact + 1e-9);
  }
}

// ---------------------------------------------------------------------------
// Oracles.

TEST(TwoStateLeakageTest, Cases) {
  std::mt19937_64 rng(13);
  const DensityOperator rho = RandomDensity(3, rng);
  EXPECT_NEAR(*TwoStateLeakage(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(*TwoStateLeakage(DensityOperator::BasisState(2, 0),
                               DensityOperator::BasisState(2, 1)),
              1.0, 1e-15);
  EXPECT_NEAR(*TwoStateLeakage(DensityOperator::BasisState(2, 0), Plus()),
              std::log2(kZeroPlusObjective), 1e-12);
  EXPECT_THAT(TwoStateLeakage(rho, DensityOperator::BasisState(2, 0)),
              ErrorKindIs(ErrorKind::kDimensionMismatch));
}

TEST(BruteForceLeakageTest, OrthogonalQubits) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(2));
  QLEAK_ASSERT_OK_AND_ASSIGN(double q, BruteForceLeakage(e));
  EXPECT_NEAR(q, 1.0, 1e-12);
}

TEST(BruteForceLeakageTest, ZeroVersusPlus) {
  QLEAK_ASSERT_OK_AND_ASSIGN(double q, BruteForceLeakage(ZeroPlus()));
  const double exact = std::log2(kZeroPlusObjective);
  EXPECT_NEAR(q, exact, 2e-3);
  EXPECT_LE(q, exact + 1e-12);
}

TEST(BruteForceLeakageTest, IndistinguishablePair) {
  const Ensemble e = *Ensemble::Create({"a", "b"}, {}, {Plus(), Plus()});
  QLEAK_ASSERT_OK_AND_ASSIGN(double q, BruteForceLeakage(e));
  EXPECT_NEAR(q, 0.0, 1e-12);
}

TEST(BruteForceLeakageTest, Errors) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(3));
  EXPECT_THAT(BruteForceLeakage(e),
              ErrorKindIs(ErrorKind::kUnsupportedDimension));
  BruteForceOptions coarse;
  coarse.grid_resolution = 8;
  EXPECT_THAT(BruteForceLeakage(ZeroPlus(), coarse),
              ErrorKindIs(ErrorKind::kInvalidConfig));
}

TEST(MutualInformationTest, Cases) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble index2, EncodeIndex(2));
  EXPECT_NEAR(*MutualInformation(index2, Povm::ComputationalBasis(2)), 1.0,
              1e-12);
  const Ensemble same =
      *Ensemble::Create({"a", "b"}, {0.3, 0.7}, {Plus(), Plus()});
  QLEAK_ASSERT_OK_AND_ASSIGN(Povm f, RandomPovm(2, 4, 0));
  EXPECT_NEAR(*MutualInformation(same, f), 0.0, 1e-12);
}

TEST(MutualInformationTest, DepolarizedIndexEncoding) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  QLEAK_ASSERT_OK_AND_ASSIGN(KrausChannel c, DepolarizingGlobal(0.5, 4));
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble noisy, ApplyChannel(c, e));
  // P[y|x] = 0.625 on the diagonal and 0.125 elsewhere; Y is uniform.
  const double conditional_entropy =
      -(0.625 * std::log2(0.625) + 3.0 * 0.125 * std::log2(0.125));
  const double expected = 2.0 - conditional_entropy;
  EXPECT_NEAR(*MutualInformation(noisy, Povm::ComputationalBasis(4)), expected,
              1e-12);
}

TEST(MutualInformationTest, NeverExceedsPerPovmLeakage) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 3;
    const int nx = 2 + trial % 5;
    Ensemble e = RandomEnsemble(d, nx, rng, trial % 2 == 0);
    std::vector<double> priors(nx);
    double total = 0.0;
    for (auto& p : priors) total += (p = unit(rng));
    for (auto& p : priors) p /= total;
    priors.back() = 1.0;
    for (int x = 0; x + 1 < nx; ++x) priors.back() -= priors[x];
    QLEAK_ASSERT_OK_AND_ASSIGN(e, e.WithPriors(priors));
    QLEAK_ASSERT_OK_AND_ASSIGN(Povm f,
                               RandomPovm(d, 1 + trial % (d * d) + d, trial));
    QLEAK_ASSERT_OK_AND_ASSIGN(double info, MutualInformation(e, f));
    QLEAK_ASSERT_OK_AND_ASSIGN(ObjectiveValue v, LeakageObjective(e, f));
    EXPECT_LE(info, v.leakage_bits + 1e-9);
    EXPECT_LE(info, std::log2(static_cast<double>(nx)) + 1e-9);
    EXPECT_GE(info, 0.0);
  }
}

TEST(NoisyLeakageTest, GlobalFormula) {
  EXPECT_EQ(*NoisyLeakageGlobal(3.0, 0.0), 3.0);
  EXPECT_EQ(*NoisyLeakageGlobal(3.0, 1.0), 0.0);
  EXPECT_NEAR(*NoisyLeakageGlobal(3.0, 0.5), std::log2(4.5), 1e-15);
  EXPECT_NEAR(*NoisyLeakageGlobal(3.0, 0.5), 2.16993, 1e-5);
}

TEST(NoisyLeakageTest, GlobalIsStrictlyDecreasing) {
  for (double q : {1e-3, 0.5, 1.0, 3.0, 6.0}) {
    double previous = *NoisyLeakageGlobal(q, 0.0);
    for (int i = 1; i <= 100; ++i) {
      const double current = *NoisyLeakageGlobal(q, i / 100.0);
      EXPECT_LT(current, previous) << "q=" << q << " p=" << i / 100.0;
      previous = current;
    }
  }
}

TEST(NoisyLeakageTest, LocalBound) {
  for (double p : {0.0, 0.2, 0.7, 1.0}) {
    EXPECT_EQ(*NoisyLeakageLocalBound(2.5, p, 1), *NoisyLeakageGlobal(2.5, p));
  }
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(*NoisyLeakageLocalBound(1.7, 1.0, k), 0.0);
  EXPECT_NEAR(*NoisyLeakageLocalBound(3.0, 0.5, 2), std::log2(6.25), 1e-15);
  EXPECT_NEAR(*NoisyLeakageLocalBound(3.0, 0.5, 2), 2.64386, 1e-5);
  for (int k = 1; k <= 4; ++k) {
    double previous = *NoisyLeakageLocalBound(2.0, 0.0, k);
    for (int i = 1; i <= 100; ++i) {
      const double current = *NoisyLeakageLocalBound(2.0, i / 100.0, k);
      EXPECT_LE(current, previous);
      previous = current;
    }
  }
}

TEST(NoisyLeakageTest, Errors) {
  EXPECT_THAT(NoisyLeakageGlobal(1.0, 1.1),
              ErrorKindIs(ErrorKind::kInvalidProbability));
  EXPECT_THAT(NoisyLeakageGlobal(1.0, -0.1),
              ErrorKindIs(ErrorKind::kInvalidProbability));
  EXPECT_THAT(NoisyLeakageLocalBound(1.0, 2.0, 2),
              ErrorKindIs(ErrorKind::kInvalidProbability));
  EXPECT_FALSE(NoisyLeakageGlobal(-1.0, 0.5).ok());
  EXPECT_FALSE(NoisyLeakageLocalBound(1.0, 0.5, 0).ok());
}

TEST(NoisyLeakageTest, FormulaMatchesOptimizerOnDepolarizedEnsemble) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  QLEAK_ASSERT_OK_AND_ASSIGN(KrausChannel c, DepolarizingGlobal(0.3, 4));
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble noisy, ApplyChannel(c, e));
  QLEAK_ASSERT_OK_AND_ASSIGN(LeakageReport report,
                             ComputeLeakage(noisy, FastConfig()));
  EXPECT_NEAR(report.leakage_bits, std::log2(0.3 + 0.7 * 4.0), 2e-3);
}

// ---------------------------------------------------------------------------
// Property suite.

TEST(VerifyPropertiesTest, IndexFourWithIdentityChannel) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  VerifyOptions options;
  options.channel = KrausChannel::Identity(4);
  QLEAK_ASSERT_OK_AND_ASSIGN(PropertyReport report,
                             VerifyProperties(e, AscentConfig{}, options));
  for (const auto& check : report.checks) {
    EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
    EXPECT_FALSE(check.skipped) << check.name;
  }
  EXPECT_TRUE(report.AllPassed());
  const PropertyCheck* dp = report.Find("data_processing");
  ASSERT_NE(dp, nullptr);
  EXPECT_NEAR(dp->value, report.leakage_bits, 1e-3);
  EXPECT_EQ(report.Find("no_such_check"), nullptr);
}

TEST(VerifyPropertiesTest, IndexFourWithGlobalNoise) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(4));
  VerifyOptions options;
  QLEAK_ASSERT_OK_AND_ASSIGN(KrausChannel c, DepolarizingGlobal(0.3, 4));
  options.channel = c;
  options.global_p = 0.3;
  QLEAK_ASSERT_OK_AND_ASSIGN(PropertyReport report,
                             VerifyProperties(e, AscentConfig{}, options));
  EXPECT_TRUE(report.Find("data_processing")->passed);
  EXPECT_NEAR(report.Find("data_processing")->value, std::log2(0.3 + 0.7 * 4.0),
              2e-3);
  EXPECT_TRUE(report.Find("global_noise_exact")->passed);
  EXPECT_TRUE(report.AllPassed());
}

TEST(VerifyPropertiesTest, IndistinguishablePair) {
  const Ensemble e = *Ensemble::Create({"a", "b"}, {}, {Plus(), Plus()});
  QLEAK_ASSERT_OK_AND_ASSIGN(PropertyReport report,
                             VerifyProperties(e, FastConfig()));
  const PropertyCheck* independence = report.Find("independence");
  ASSERT_NE(independence, nullptr);
  EXPECT_TRUE(independence->passed);
  EXPECT_LT(report.leakage_bits, 1e-6);
  EXPECT_TRUE(report.AllPassed());
}

TEST(VerifyPropertiesTest, NonPowerOfTwoSkipsLocalBound) {
  std::mt19937_64 rng(15);
  const Ensemble e = RandomEnsemble(3, 3, rng);
  QLEAK_ASSERT_OK_AND_ASSIGN(PropertyReport report,
                             VerifyProperties(e, FastConfig()));
  EXPECT_TRUE(report.Find("local_noise_bound")->skipped);
  EXPECT_TRUE(report.AllPassed());
}

TEST(VerifyPropertiesTest, CorruptedPovmIsCaught) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(2));
  VerifyOptions options;
  options.corrupt_optimal_povm = true;
  QLEAK_ASSERT_OK_AND_ASSIGN(PropertyReport report,
                             VerifyProperties(e, FastConfig(), options));
  EXPECT_FALSE(report.Find("povm_validity")->passed);
  EXPECT_FALSE(report.AllPassed());
}

TEST(VerifyPropertiesTest, ChannelDimensionMustMatch) {
  QLEAK_ASSERT_OK_AND_ASSIGN(Ensemble e, EncodeIndex(2));
  VerifyOptions options;
  options.channel = KrausChannel::Identity(3);
  EXPECT_THAT(VerifyProperties(e, FastConfig(), options),
              ErrorKindIs(ErrorKind::kDimensionMismatch));
}

}  // namespace
}  // namespace qleak
