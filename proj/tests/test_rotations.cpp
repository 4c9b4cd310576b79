// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hjd/rotations.hpp"
#include "oracles.hpp"

using namespace hjd;
using hjd::test::max_abs_diff;
using hjd::test::rel_diff;

namespace {

RotationParams random_params(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  RotationParams r;
  r.p = rng() % n;
  do r.q = rng() % n; while (r.q == r.p);
  if (r.p > r.q) std::swap(r.p, r.q);
  r.theta = u(rng);
  r.alpha = 2 * u(rng);
  r.y = 0.5 * u(rng);
  r.phi = 2 * u(rng);
  return r;
}

ComplexMatrix dense_combined(std::size_t n, const RotationParams& r) {
  return oracle::dense_givens(n, r.p, r.q, r.theta, r.alpha) *
         oracle::dense_hyperbolic(n, r.p, r.q, r.y, r.phi);
}

}  // namespace

TEST(Blocks, MatchDefinitions) {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const RotationParams r = random_params(2, rng);
    const ComplexMatrix e = embed(combined_block(r), 2, 0, 1);
    EXPECT_LT(max_abs_diff(e, dense_combined(2, {0, 1, r.theta, r.alpha, r.y, r.phi})), 1e-14);
  }
  const Block2 g = givens_block(0.3, 0.7);
  const Block2 gc = givens_block_cs(std::cos(0.3), std::sin(0.3) * std::exp(cd{0, 0.7}));
  EXPECT_LT(std::abs(g.pq - gc.pq) + std::abs(g.qp - gc.qp), 1e-15);
  const Block2 h = hyperbolic_block(0.4, 1.1);
  const Block2 hc = hyperbolic_block_cs(std::cosh(0.4), std::sinh(0.4), 1.1);
  EXPECT_LT(std::abs(h.pq - hc.pq) + std::abs(h.qp - hc.qp), 1e-15);
}

TEST(Congruence, HermitianMatchesDense) {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 6;
    const RotationParams r = random_params(n, rng);
    ComplexMatrix m = random_gaussian(n, n, rng);
    const ComplexMatrix d = dense_combined(n, r);
    const ComplexMatrix ref = adjoint(d) * m * d;
    apply_hermitian_congruence(m, combined_block(r), r.p, r.q);
    EXPECT_LT(rel_diff(m, ref), 1e-13);
  }
}

TEST(Congruence, TransposeMatchesDense) {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 6;
    const RotationParams r = random_params(n, rng);
    ComplexMatrix m = random_gaussian(n, n, rng);
    const ComplexMatrix d = dense_combined(n, r);
    const ComplexMatrix ref = adjoint(d) * m * conj(d);
    apply_transpose_congruence(m, combined_block(r), r.p, r.q);
    EXPECT_LT(rel_diff(m, ref), 1e-13);
  }
}

TEST(Congruence, IdentityLeavesMatrixUnchanged) {
  Rng rng(24);
  ComplexMatrix m = random_gaussian(4, 4, rng);
  const ComplexMatrix before = m;
  apply_hermitian_congruence(m, Block2{}, 1, 3);
  apply_transpose_congruence(m, Block2{}, 0, 2);
  EXPECT_EQ(m, before);
}

TEST(Accumulate, TwoStepsEqualDenseProduct) {
  Rng rng(25);
  const std::size_t n = 5;
  const RotationParams a = random_params(n, rng), b = random_params(n, rng);
  ComplexMatrix v = ComplexMatrix::identity(n);
  accumulate(v, combined_block(a), a.p, a.q);
  accumulate(v, combined_block(b), b.p, b.q);
  EXPECT_LT(rel_diff(v, dense_combined(n, a) * dense_combined(n, b)), 1e-13);
}

TEST(Accumulate, GivensKeepsUnitary) {
  Rng rng(26);
  const std::size_t n = 6;
  ComplexMatrix v = ComplexMatrix::identity(n);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 500; ++k) {
    const std::size_t p = rng() % (n - 1);
    accumulate(v, givens_block(u(rng), u(rng)), p, p + 1 + rng() % (n - 1 - p));
  }
  EXPECT_LT(max_abs_diff(adjoint(v) * v, ComplexMatrix::identity(n)), 1e-11);
}

TEST(RealCongruence, MatchesDense) {
  Rng rng(27);
  const std::size_t n = 6;
  RealMatrix m = hjd::test::random_real(n, n, rng);
  const double t = 0.37;
  RealMatrix g = RealMatrix::identity(n);
  g(1, 1) = g(4, 4) = std::cos(t);
  g(1, 4) = -std::sin(t);
  g(4, 1) = std::sin(t);
  const RealMatrix ref = transpose(g) * m * g;
  apply_real_congruence(m, std::cos(t), std::sin(t), 1, 4);
  EXPECT_LT(rel_diff(m, ref), 1e-14);
  RealMatrix v = RealMatrix::identity(n);
  accumulate_real(v, std::cos(t), std::sin(t), 1, 4);
  EXPECT_LT(max_abs_diff(v, g), 1e-15);
}
