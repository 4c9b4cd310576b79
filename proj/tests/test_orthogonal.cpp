// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hjd/errors.hpp"
#include "hjd/metrics.hpp"
#include "hjd/orthogonal.hpp"
#include "oracles.hpp"

using namespace hjd;

namespace {

TargetSets random_2x2_sets(Rng& rng) {
  std::vector<ComplexMatrix> m, n;
  for (int k = 0; k < 2; ++k) m.push_back(random_gaussian(2, 2, rng));
  for (int k = 0; k < 2; ++k) n.push_back(random_gaussian(2, 2, rng));
  return TargetSets::make(m, n);
}

Problem exact_unitary(std::size_t n, Rng& rng) {
  ScenarioSpec spec;
  spec.n = n;
  spec.cond_target = 1.0;
  return gen_problem(spec, rng);
}

}  // namespace

TEST(CoRotation, DiagonalSetsGiveIdentity) {
  ComplexMatrix d(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = cd{0, 1};
  d(2, 2) = -1.0;
  const TargetSets s = TargetSets::make({d}, {d});
  const GivensStep st = co_hjd_rotation(s, 0, 2);
  EXPECT_EQ(st.g, cd{0.0});
  EXPECT_DOUBLE_EQ(st.c, 1.0);
}

TEST(CoRotation, BeatsCoarseGrid) {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const TargetSets s = random_2x2_sets(rng);
    const GivensStep st = co_hjd_rotation(s, 0, 1);
    EXPECT_GE(st.c, 1.0 / std::sqrt(2.0) - 1e-15);
    const double closed = oracle::co_criterion(s, st.params.theta, st.params.alpha);
    EXPECT_LE(closed, oracle::co_grid(s, 300, 300).value + 1e-12);
  }
}

TEST(CoHjd, ExactProblemConverges) {
  Rng rng(42);
  for (int i = 0; i < 5; ++i) {
    Problem p = exact_unitary(5, rng);
    const JdResult r = co_hjd(p.sets, SweepConfig{}, &p.truth.A);
    EXPECT_TRUE(r.diagnostics.converged);
    EXPECT_LT(*r.diagnostics.sweeps.back().pi, 1e-10);
    EXPECT_LT(jd_cost(p.sets), 1e-20);
  }
}

TEST(CoHjd, CostNonIncreasing) {
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    std::vector<ComplexMatrix> m, n;
    for (int k = 0; k < 3; ++k) m.push_back(random_gaussian(4, 4, rng));
    for (int k = 0; k < 3; ++k) n.push_back(random_gaussian(4, 4, rng));
    TargetSets s = TargetSets::make(m, n);
    const JdResult r = co_hjd(s, SweepConfig{});
    const auto& sw = r.diagnostics.sweeps;
    for (std::size_t k = 1; k < sw.size(); ++k)
      EXPECT_LE(sw[k].cost, sw[k - 1].cost * (1 + 1e-12));
  }
}

TEST(CoHjd, VIsUnitaryAndMatchesTransformedSets) {
  Rng rng(44);
  std::vector<ComplexMatrix> m{random_gaussian(4, 4, rng)}, n{hjd::test::random_symmetric(4, rng)};
  const TargetSets original = TargetSets::make(m, n);
  TargetSets s = original;
  const JdResult r = co_hjd(s, SweepConfig{});
  EXPECT_LT(hjd::test::max_abs_diff(adjoint(r.V) * r.V, ComplexMatrix::identity(4)), 1e-12);
  EXPECT_NEAR(jd_cost(original, r.V), jd_cost(s), 1e-10);
}

TEST(CoHjd, JacobiReduction) {
  const auto r = oracle::check_jacobi_reduction(45, 10);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(RoTransform, Lemma1) {
  const auto r = oracle::check_lemma1(46, 10);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(RoTransform, RankDeficientN1) {
  ComplexMatrix n1(3, 3);
  n1(0, 0) = 1.0;
  n1(1, 1) = 1.0;
  try {
    ro_transform(n1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::rank_deficient);
  }
}

TEST(RoRotation, BeatsRealGrid) {
  Rng rng(47);
  for (int i = 0; i < 10; ++i) {
    const TargetSets s = random_2x2_sets(rng);
    const GivensStep st = ro_rotation(s, 0, 1);
    EXPECT_EQ(st.g.imag(), 0.0);
    EXPECT_LE(oracle::co_criterion(s, st.params.theta, st.params.alpha),
              oracle::ro_grid(s, 2001).value + 1e-12);
  }
}

TEST(RoHjd, NeedsN) {
  Rng rng(48);
  TargetSets s = TargetSets::make({random_gaussian(3, 3, rng)}, {});
  EXPECT_THROW(ro_hjd(s, SweepConfig{}), Error);
}

TEST(RoHjd, ExactProblemConverges) {
  Rng rng(49);
  for (int i = 0; i < 5; ++i) {
    Problem p = exact_unitary(5, rng);
    const JdResult r = ro_hjd(p.sets, SweepConfig{}, &p.truth.A);
    EXPECT_TRUE(r.diagnostics.converged);
    EXPECT_LT(*r.diagnostics.sweeps.back().pi, 1e-10);
  }
}

TEST(RoTransform, ComplexPhaseL1) {
  Rng rng(50);
  const std::size_t n = 4;
  const ComplexMatrix a = random_unitary(n, rng);
  ComplexMatrix l(n, n), phi(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double mag = 0.5 + 0.6 * k, arg = 0.9 * k - 1.0;
    l(k, k) = std::polar(mag, arg);
    phi(k, k) = std::polar(1.0, arg / 2);
  }
  const ComplexMatrix b = ro_transform(a * l * transpose(a));
  const ComplexMatrix p = adjoint(b) * a * phi;
  EXPECT_LT(frobenius_norm(imag_part(p)) / frobenius_norm(p), 1e-8);
  EXPECT_LT(frobenius_norm(p * transpose(p) - ComplexMatrix::identity(n)), 1e-8);
}
