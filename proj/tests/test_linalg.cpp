// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hjd/errors.hpp"
#include "hjd/linalg.hpp"
#include "oracles.hpp"

using namespace hjd;
using hjd::test::max_abs_diff;

namespace {

RealSym3 random_sym3(Rng& rng) {
  std::normal_distribution<double> nd;
  return {nd(rng), nd(rng), nd(rng), nd(rng), nd(rng), nd(rng)};
}

double rayleigh(const RealMatrix& q, const std::vector<double>& v) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    den += v[i] * v[i];
    for (std::size_t j = 0; j < v.size(); ++j) num += v[i] * q(i, j) * v[j];
  }
  return num / den;
}

}  // namespace

TEST(Sym3Eigvec, DiagonalPicksLargest) {
  const Vec3 v = sym3_principal_eigvec({3, 0, 0, 2, 0, 1});
  EXPECT_DOUBLE_EQ(v[0], 1.0);
  EXPECT_DOUBLE_EQ(v[1], 0.0);
  EXPECT_DOUBLE_EQ(v[2], 0.0);
}

TEST(Sym3Eigvec, TieGoesToFirstIndex) {
  const Vec3 v = sym3_principal_eigvec({2, 0, 0, 2, 0, 1});
  EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-12);
}

TEST(Sym3Eigvec, MatchesPowerIteration) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const RealSym3 q = random_sym3(rng);
    const Vec3 v = sym3_principal_eigvec(q);
    const auto ref = oracle::power_iteration(q.dense());
    const RealMatrix d = q.dense();
    EXPECT_NEAR(rayleigh(d, {v[0], v[1], v[2]}), rayleigh(d, ref), 1e-9);
    EXPECT_NEAR(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 1.0, 1e-12);
  }
}

TEST(Sym2Eigvec, MatchesPowerIteration) {
  Rng rng(12);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 50; ++i) {
    const RealSym2 q{nd(rng), nd(rng), nd(rng)};
    const Vec2 v = sym2_principal_eigvec(q);
    RealMatrix d(2, 2);
    d(0, 0) = q.a00;
    d(0, 1) = d(1, 0) = q.a01;
    d(1, 1) = q.a11;
    EXPECT_NEAR(rayleigh(d, {v[0], v[1]}), rayleigh(d, oracle::power_iteration(d)), 1e-12);
  }
}

TEST(JPencil, DiagonalExample) {
  const PencilEigvec e = jpencil_selected_eigvec({1, 0, 0, 2, 0, 3});
  EXPECT_NEAR(e.lambda, 2.0, 1e-12);
  EXPECT_NEAR(std::abs(e.w[1]), 1.0, 1e-12);
  EXPECT_FALSE(e.median_differs);
}

TEST(JPencil, RandomPsdSatisfiesPencil) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const RealMatrix g = hjd::test::random_real(3, 3, rng);
    const RealMatrix qd = transpose(g) * g;
    const RealSym3 q{qd(0, 0), qd(0, 1), qd(0, 2), qd(1, 1), qd(1, 2), qd(2, 2)};
    const PencilEigvec e = jpencil_selected_eigvec(q);
    const double jn = -e.w[0] * e.w[0] + e.w[1] * e.w[1] + e.w[2] * e.w[2];
    EXPECT_NEAR(jn, 1.0, 1e-10);
    EXPECT_GE(e.w[2], 0.0);
    const double jdiag[3] = {-1, 1, 1};
    for (int r = 0; r < 3; ++r) {
      double lhs = 0;
      for (int c = 0; c < 3; ++c) lhs += qd(r, c) * e.w[c];
      EXPECT_NEAR(lhs, e.lambda * jdiag[r] * e.w[r], 1e-8 * (1 + std::abs(e.lambda)));
    }
  }
}

TEST(SymmetricEigen, MatchesDenseSolver) {
  Rng rng(14);
  const RealMatrix a = hjd::test::random_real_symmetric(7, rng);
  auto got = symmetric_eigen(a).values;
  std::sort(got.begin(), got.end());
  const auto ref = oracle::symmetric_eigenvalues(a);
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(got[i], ref[i], 1e-11);
}

TEST(Takagi, ReconstructsSymmetric) {
  Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix t = hjd::test::random_symmetric(5, rng);
    const Takagi tk = takagi(t);
    ComplexMatrix s(5, 5);
    for (std::size_t k = 0; k < 5; ++k) s(k, k) = tk.sigma[k];
    EXPECT_LT(frobenius_norm(tk.E * s * transpose(tk.E) - t), 1e-8);
    EXPECT_LT(max_abs_diff(adjoint(tk.E) * tk.E, ComplexMatrix::identity(5)), 1e-10);
    for (std::size_t k = 1; k < 5; ++k) EXPECT_GE(tk.sigma[k - 1], tk.sigma[k]);
  }
}

TEST(Takagi, IdentityAndRejectsAsymmetric) {
  const Takagi tk = takagi(ComplexMatrix::identity(3));
  for (double s : tk.sigma) EXPECT_NEAR(s, 1.0, 1e-14);
  ComplexMatrix bad = ComplexMatrix::identity(3);
  bad(0, 1) = 1.0;
  EXPECT_THROW(takagi(bad), Error);
}

TEST(Svd, ReconstructsAndMatchesOracle) {
  Rng rng(16);
  const ComplexMatrix x = random_gaussian(6, 4, rng);
  const Svd s = svd(x);
  ComplexMatrix sig(s.U.cols(), s.V.cols());
  for (std::size_t k = 0; k < s.sigma.size(); ++k) sig(k, k) = s.sigma[k];
  EXPECT_LT(frobenius_norm(s.U * sig * adjoint(s.V) - x), 1e-9);
  const auto ref = oracle::singular_values(x);
  for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(s.sigma[k], ref[k], 1e-9);
}

TEST(OrthonormalColumns, ZeroColumnIsRankDeficient) {
  ComplexMatrix a(3, 2);
  a(0, 0) = 1.0;
  try {
    orthonormal_columns(a);
    FAIL() << "expected rank_deficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::rank_deficient);
  }
}
