// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hjd/errors.hpp"
#include "hjd/metrics.hpp"
#include "oracles.hpp"

using namespace hjd;
using hjd::test::max_abs_diff;

namespace {

ComplexMatrix diag(const std::vector<cd>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST(RandomMixing, ConditionTargets) {
  Rng rng(71);
  const ComplexMatrix u = random_mixing(6, 1.0, rng);
  EXPECT_LT(max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(6)), 1e-10);
  const auto s = oracle::singular_values(random_mixing(6, 100.0, rng));
  EXPECT_NEAR(s.front() / s.back(), 100.0, 1.0);
}

TEST(RandomCn, Moments) {
  Rng rng(72);
  const int n = 100000;
  double re2 = 0, im2 = 0, mean_re = 0;
  for (int i = 0; i < n; ++i) {
    const cd z = random_cn(rng);
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
    mean_re += z.real();
  }
  EXPECT_NEAR(re2 / n, 0.5, 0.01);
  EXPECT_NEAR(im2 / n, 0.5, 0.01);
  EXPECT_NEAR(mean_re / n, 0.0, 0.01);
}

TEST(GenProblem, ExactStructure) {
  Rng rng(73);
  ScenarioSpec spec;
  spec.n = 4;
  spec.K1 = 3;
  spec.K2 = 2;
  const Problem p = gen_problem(spec, rng);
  ASSERT_EQ(p.sets.M.size(), 3u);
  ASSERT_EQ(p.sets.N.size(), 2u);
  const ComplexMatrix& a = p.truth.A;
  for (std::size_t k = 0; k < 3; ++k)
    EXPECT_LT(max_abs_diff(p.sets.M[k], a * diag(p.truth.D[k]) * adjoint(a)), 1e-12);
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_LT(max_abs_diff(p.sets.N[k], a * diag(p.truth.L[k]) * transpose(a)), 1e-12);
}

TEST(GenProblem, NoiseHitsSnr) {
  Rng rng(74);
  ScenarioSpec spec;
  spec.n = 4;
  spec.K1 = 2;
  spec.K2 = 0;
  spec.snr_db = 30.0;
  const Problem p = gen_problem(spec, rng);
  for (std::size_t k = 0; k < 2; ++k) {
    const ComplexMatrix clean = p.truth.A * diag(p.truth.D[k]) * adjoint(p.truth.A);
    EXPECT_NEAR(snr_db(clean, p.sets.M[k] - clean), 30.0, 1e-9);
  }
}

TEST(GenProblem, MouTarget) {
  Rng rng(75);
  ScenarioSpec spec;
  spec.n = 5;
  spec.mou_target = 1.0 - 1e-6;
  const Problem p = gen_problem(spec, rng);
  EXPECT_GT(p.truth.mou, 1.0 - 1e-6);
  EXPECT_NEAR(p.truth.mou, modulus_of_uniqueness(diagonal_profiles(p.truth)), 1e-14);
}

TEST(ScenarioSpec, Validation) {
  ScenarioSpec s;
  s.n = 1;
  EXPECT_THROW(s.validate(), Error);
  s = ScenarioSpec{};
  s.K1 = s.K2 = 0;
  EXPECT_THROW(s.validate(), Error);
}

TEST(DeriveSeed, StableAndDistinct) {
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 2));
}

TEST(Bss, SourcesHaveUnitPower) {
  Rng rng(76);
  BssSpec spec;
  const ComplexMatrix s = gen_ar1_sources(spec, rng);
  ASSERT_EQ(s.rows(), spec.n);
  ASSERT_EQ(s.cols(), spec.T);
  for (std::size_t i = 0; i < spec.n; ++i) {
    double p = 0;
    for (std::size_t t = 0; t < spec.T; ++t) p += std::norm(s(i, t));
    EXPECT_NEAR(p / spec.T, 1.0, 1e-12);
  }
}

TEST(Bss, ColoredNoiseCovariance) {
  BssSpec spec;
  spec.noise = NoiseKind::colored;
  const RealMatrix c = noise_covariance(spec);
  EXPECT_DOUBLE_EQ(c(0, 0), 1.0);
  EXPECT_NEAR(c(0, 2), 0.64, 1e-15);
}

TEST(Bss, PrewhiteningGivesIdentityCovariance) {
  Rng rng(77);
  BssSpec spec;
  const ComplexMatrix a = random_gaussian(spec.m, spec.n, rng);
  const Observation obs = mix_observe(a, gen_ar1_sources(spec, rng), spec, rng);
  const Whitening w = prewhiten(obs.X, spec.n);
  EXPECT_LT(max_abs_diff(correlation(w.Z, 0), ComplexMatrix::identity(spec.n)), 1e-10);
}

TEST(Bss, ProblemShapes) {
  Rng rng(78);
  BssSpec spec;
  const ComplexMatrix a = random_gaussian(spec.m, spec.n, rng);
  const BssProblem p = gen_bss_problem(spec, a, rng);
  EXPECT_EQ(p.sets.M.size(), spec.lags_M.size());
  EXPECT_EQ(p.sets.N.size(), spec.lags_N.size());
  EXPECT_EQ(p.sets.n, spec.n);
  const BssAugmented ag = gen_bss_augmented(spec, a, rng);
  EXPECT_EQ(ag.set.n, spec.n);
  EXPECT_EQ(ag.set.M.size(), spec.lags_M.size());
}

TEST(Bss, Validation) {
  BssSpec spec;
  spec.rho = 1.5;
  EXPECT_THROW(spec.validate(), Error);
  spec = BssSpec{};
  spec.m = 2;
  EXPECT_THROW(spec.validate(), Error);
}
