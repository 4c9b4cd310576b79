// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hjd/aro.hpp"
#include "hjd/errors.hpp"
#include "oracles.hpp"

using namespace hjd;
using hjd::test::max_abs_diff;

namespace {

AugmentedSet random_set(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<RealMatrix> m;
  for (std::size_t i = 0; i < k; ++i) m.push_back(hjd::test::random_real_symmetric(2 * n, rng));
  return AugmentedSet::make(m);
}

}  // namespace

TEST(Augment, MixingHasBlockStructure) {
  Rng rng(51);
  const ComplexMatrix a = random_gaussian(3, 2, rng);
  const RealMatrix b = augment_mixing(a);
  ASSERT_EQ(b.rows(), 6u);
  ASSERT_EQ(b.cols(), 4u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(b(i, j), a(i, j).real());
      EXPECT_EQ(b(i, j + 2), -a(i, j).imag());
      EXPECT_EQ(b(i + 3, j), a(i, j).imag());
      EXPECT_EQ(b(i + 3, j + 2), a(i, j).real());
    }
}

TEST(Augment, StatisticsMatchRealCovariance) {
  Rng rng(52);
  const std::size_t n = 3, t = 200;
  const ComplexMatrix z = random_gaussian(n, t, rng);
  ComplexMatrix r(n, n), p(n, n);
  RealMatrix direct(2 * n, 2 * n);
  for (std::size_t s = 0; s < t; ++s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) += z(i, s) * std::conj(z(j, s)) / double(t);
        p(i, j) += z(i, s) * z(j, s) / double(t);
      }
  for (std::size_t s = 0; s < t; ++s)
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const double xi = i < n ? z(i, s).real() : z(i - n, s).imag();
        const double xj = j < n ? z(j, s).real() : z(j - n, s).imag();
        direct(i, j) += xi * xj / double(t);
      }
  EXPECT_LT(max_abs_diff(augment_statistics(r, p), direct), 1e-13);
}

TEST(AugmentedSet, Validation) {
  EXPECT_THROW(AugmentedSet::make({RealMatrix::identity(3)}), Error);
  RealMatrix bad = RealMatrix::identity(4);
  bad(0, 1) = 1.0;
  EXPECT_THROW(AugmentedSet::make({bad}), Error);
  EXPECT_EQ(AugmentedSet::make({RealMatrix::identity(2)}).n, 1u);
}

TEST(PairedRotation, MatchesDenseAndPreservesNorm) {
  Rng rng(53);
  const std::size_t n = 3;
  for (int kind = 0; kind < 3; ++kind) {
    AugmentedSet s = random_set(n, 2, rng);
    const auto before = s.M;
    const double t = 0.41;
    RealMatrix v = RealMatrix::identity(2 * n);
    apply_paired_rotation(s, v, static_cast<PairKind>(kind), 0, 2, {std::cos(t), std::sin(t)});
    EXPECT_NEAR(aro_cost(s), oracle::aro_criterion(before, kind, 0, 2, t), 1e-12);
    for (std::size_t k = 0; k < before.size(); ++k) {
      EXPECT_NEAR(frobenius_norm(s.M[k]), frobenius_norm(before[k]), 1e-12);
      EXPECT_LT(max_abs_diff(transpose(v) * before[k] * v, s.M[k]), 1e-12);
    }
  }
}

TEST(PairedRotation, ZeroAngleIsIdentity) {
  Rng rng(54);
  AugmentedSet s = random_set(2, 2, rng);
  const auto before = s.M;
  RealMatrix v = RealMatrix::identity(4);
  apply_paired_rotation(s, v, PairKind::theta, 0, 1, {1.0, 0.0});
  EXPECT_EQ(s.M, before);
}

TEST(AroRotation, BeatsGrid) {
  Rng rng(55);
  for (int i = 0; i < 10; ++i) {
    const AugmentedSet s = random_set(3, 3, rng);
    const RealGivens g0 = aro_rotation_theta(s, 0, 2);
    const RealGivens g1 = aro_rotation_theta_prime(s, 0, 2);
    const RealGivens g2 = aro_rotation_theta_dprime(s, 1);
    EXPECT_LE(oracle::aro_criterion(s.M, 0, 0, 2, std::atan2(g0.s, g0.c)),
              oracle::aro_grid(s.M, 0, 0, 2, 2001).value + 1e-12);
    EXPECT_LE(oracle::aro_criterion(s.M, 1, 0, 2, std::atan2(g1.s, g1.c)),
              oracle::aro_grid(s.M, 1, 0, 2, 2001).value + 1e-12);
    EXPECT_LE(oracle::aro_criterion(s.M, 2, 1, 1, std::atan2(g2.s, g2.c)),
              oracle::aro_grid(s.M, 2, 1, 1, 2001).value + 1e-12);
  }
}

TEST(AroHjd, CostNonIncreasing) {
  Rng rng(56);
  for (int i = 0; i < 50; ++i) {
    AugmentedSet s = random_set(3, 4, rng);
    const AroResult r = aro_hjd(s, SweepConfig{});
    const auto& sw = r.diagnostics.sweeps;
    for (std::size_t k = 1; k < sw.size(); ++k)
      EXPECT_LE(sw[k].cost, sw[k - 1].cost * (1 + 1e-12));
  }
}

TEST(AroHjd, ExactProblemConverges) {
  Rng rng(57);
  ScenarioSpec spec;
  spec.n = 4;
  spec.cond_target = 1.0;
  for (int i = 0; i < 5; ++i) {
    AugmentedProblem p = gen_augmented_problem(spec, random_unitary(4, rng), rng);
    const AroResult r = aro_hjd(p.set, SweepConfig{}, &p.mixing);
    EXPECT_TRUE(r.diagnostics.converged);
    EXPECT_LT(*r.diagnostics.sweeps.back().pi, 1e-10);
  }
}

TEST(AroHjd, PreservesAugmentedStructure) {
  Rng rng(58);
  ScenarioSpec spec;
  spec.n = 3;
  spec.snr_db = 10.0;
  AugmentedProblem p = gen_augmented_problem(spec, random_gaussian(3, 3, rng), rng);
  const AroResult r = aro_hjd(p.set, SweepConfig{});
  const std::size_t n = 3;
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(r.V(i, j) - r.V(i + n, j + n)));
      worst = std::max(worst, std::abs(r.V(i, j + n) + r.V(i + n, j)));
    }
  EXPECT_LT(worst, 1e-12);
  EXPECT_GT(r.diagnostics.sweeps_run(), 1);
}
