// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hjd/errors.hpp"
#include "hjd/hcjdi.hpp"
#include "hjd/orthogonal.hpp"
#include "hjd/scenarios.hpp"

namespace hjd::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

Eigen::MatrixXd to_eigen(const RealMatrix& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix a(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) a(i, j) = e(i, j);
  return a;
}

template <class M>
double off(const M& x) {
  double s = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (i != j) s += std::norm(x(i, j));
  return s;
}

// 2x2 block entries for the p = 0, q = 1 grid evaluations.
struct B2 {
  cd a, b, c, d;  // [[a, b], [c, d]]
};

B2 givens2(double ct, double st, cd e) { return {ct, -st * std::conj(e), st * e, ct}; }
B2 hyper2(double ch, double sh, cd e) { return {ch, sh * std::conj(e), sh * e, ch}; }
B2 mul(const B2& x, const B2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

// Off-diagonal entries (01, 10) of RᴴXR (or RᴴXR* when conj_right).
std::pair<cd, cd> congruence_off(const ComplexMatrix& x, const B2& r, bool conj_right) {
  const cd ra = conj_right ? std::conj(r.a) : r.a, rb = conj_right ? std::conj(r.b) : r.b;
  const cd rc = conj_right ? std::conj(r.c) : r.c, rd = conj_right ? std::conj(r.d) : r.d;
  const cd y00 = x(0, 0) * ra + x(0, 1) * rc;
  const cd y01 = x(0, 0) * rb + x(0, 1) * rd;
  const cd y10 = x(1, 0) * ra + x(1, 1) * rc;
  const cd y11 = x(1, 0) * rb + x(1, 1) * rd;
  const cd x01 = std::conj(r.a) * y01 + std::conj(r.c) * y11;
  const cd x10 = std::conj(r.b) * y00 + std::conj(r.d) * y10;
  return {x01, x10};
}

double co_value(const TargetSets& sets, const B2& r) {
  double s = 0;
  for (const auto& m : sets.M) {
    const auto [a, b] = congruence_off(m, r, false);
    s += std::norm(a) + std::norm(b);
  }
  for (const auto& n : sets.N) {
    const auto [a, b] = congruence_off(n, r, true);
    s += std::norm(a) + std::norm(b);
  }
  return s;
}

double hcjdi_value(const std::vector<ComplexMatrix>& mt, const std::vector<ComplexMatrix>& n,
                   const B2& r) {
  double s = 0;
  for (const auto& m : mt) s += std::norm(congruence_off(m, r, false).first);
  for (const auto& x : n) s += std::norm(congruence_off(x, r, true).first);
  return s;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return v;
}

}  // namespace

ComplexMatrix dense_givens(std::size_t n, std::size_t p, std::size_t q, double theta, double alpha) {
  ComplexMatrix g = ComplexMatrix::identity(n);
  g(p, p) = std::cos(theta);
  g(q, q) = std::cos(theta);
  g(p, q) = -std::sin(theta) * std::exp(cd{0, -alpha});
  g(q, p) = std::sin(theta) * std::exp(cd{0, alpha});
  return g;
}

ComplexMatrix dense_hyperbolic(std::size_t n, std::size_t p, std::size_t q, double y, double phi) {
  ComplexMatrix h = ComplexMatrix::identity(n);
  h(p, p) = std::cosh(y);
  h(q, q) = std::cosh(y);
  h(p, q) = std::sinh(y) * std::exp(cd{0, -phi});
  h(q, p) = std::sinh(y) * std::exp(cd{0, phi});
  return h;
}

double jd_cost(const TargetSets& sets, const ComplexMatrix& v) {
  const Eigen::MatrixXcd ev = to_eigen(v);
  double s = 0;
  for (const auto& m : sets.M) s += off(Eigen::MatrixXcd(ev.adjoint() * to_eigen(m) * ev));
  for (const auto& n : sets.N) s += off(Eigen::MatrixXcd(ev.adjoint() * to_eigen(n) * ev.conjugate()));
  return s;
}

std::vector<double> power_iteration(const RealMatrix& q, int iterations) {
  const std::size_t n = q.rows();
  const Eigen::MatrixXd b =
      to_eigen(q) + frobenius_norm(q) * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.1 * static_cast<double>(i);
  x.normalize();
  for (int k = 0; k < iterations; ++k) {
    x = b * x;
    x.normalize();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    if (x[i] < 0.0) x = -x;
    break;
  }
  return {x.data(), x.data() + n};
}

std::vector<double> symmetric_eigenvalues(const RealMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double mou_gram(const DiagonalProfiles& profiles) {
  const Eigen::Index n = static_cast<Eigen::Index>(profiles.size());
  const Eigen::Index len = static_cast<Eigen::Index>(profiles.front().size());
  Eigen::MatrixXcd d(len, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < len; ++k) d(k, i) = profiles[i][k];
  const Eigen::MatrixXcd g = d.adjoint() * d;
  double best = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j)
        best = std::max(best, std::abs(g(i, j)) / std::sqrt(g(i, i).real() * g(j, j).real()));
  return best;
}

double co_criterion(const TargetSets& sets, double theta, double alpha) {
  return co_value(sets, givens2(std::cos(theta), std::sin(theta), std::exp(cd{0, alpha})));
}

GridResult co_grid(const TargetSets& sets, int n_theta, int n_alpha) {
  const auto thetas = linspace(-kPi / 4, kPi / 4, n_theta);
  std::vector<cd> phases(n_alpha);
  for (int k = 0; k < n_alpha; ++k) phases[k] = std::exp(cd{0, 2 * kPi * k / n_alpha});
  GridResult best{std::numeric_limits<double>::infinity(), 0, 0};
  for (double t : thetas) {
    const double ct = std::cos(t), st = std::sin(t);
    for (int k = 0; k < n_alpha; ++k) {
      const double v = co_value(sets, givens2(ct, st, phases[k]));
      if (v < best.value) best = {v, t, 2 * kPi * k / n_alpha};
    }
  }
  return best;
}

GridResult ro_grid(const TargetSets& sets, int n_theta) {
  GridResult best{std::numeric_limits<double>::infinity(), 0, 0};
  for (double t : linspace(-kPi / 4, kPi / 4, n_theta)) {
    const double v = co_criterion(sets, t, 0.0);
    if (v < best.value) best = {v, t, 0};
  }
  return best;
}

double hcjdi_criterion(const std::vector<ComplexMatrix>& mt, const std::vector<ComplexMatrix>& n,
                       double theta, double y, double phase) {
  const cd e = std::exp(cd{0, phase});
  const B2 r = mul(givens2(std::cos(theta), std::sin(theta), e), hyper2(std::cosh(y), std::sinh(y), e));
  return hcjdi_value(mt, n, r);
}

GridResult hcjdi_grid(const std::vector<ComplexMatrix>& mt, const std::vector<ComplexMatrix>& n,
                      double phase, int n_theta, int n_y) {
  const cd e = std::exp(cd{0, phase});
  const auto thetas = linspace(-kPi / 4, kPi / 4, n_theta);
  const auto ys = linspace(-2.0, 2.0, n_y);
  std::vector<B2> hs;
  for (double y : ys) hs.push_back(hyper2(std::cosh(y), std::sinh(y), e));
  GridResult best{std::numeric_limits<double>::infinity(), 0, 0};
  for (double t : thetas) {
    const B2 g = givens2(std::cos(t), std::sin(t), e);
    for (int k = 0; k < n_y; ++k) {
      const double v = hcjdi_value(mt, n, mul(g, hs[k]));
      if (v < best.value) best = {v, t, ys[k]};
    }
  }
  return best;
}

double aro_criterion(const std::vector<RealMatrix>& m, int kind, std::size_t p, std::size_t q,
                     double theta) {
  const std::size_t dim = m.front().rows(), n = dim / 2;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(dim, dim);
  auto givens = [&](std::size_t a, std::size_t b) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim, dim);
    g(a, a) = g(b, b) = std::cos(theta);
    g(a, b) = -std::sin(theta);
    g(b, a) = std::sin(theta);
    v = v * g;
  };
  if (kind == 0) {
    givens(p, q);
    givens(p + n, q + n);
  } else if (kind == 1) {
    givens(p, q + n);
    givens(q, p + n);
  } else {
    givens(p, p + n);
  }
  double s = 0;
  for (const auto& x : m) s += off(Eigen::MatrixXd(v.transpose() * to_eigen(x) * v));
  return s;
}

GridResult aro_grid(const std::vector<RealMatrix>& m, int kind, std::size_t p, std::size_t q,
                    int n_theta) {
  GridResult best{std::numeric_limits<double>::infinity(), 0, 0};
  for (double t : linspace(-kPi / 4, kPi / 4, n_theta)) {
    const double v = aro_criterion(m, kind, p, q, t);
    if (v < best.value) best = {v, t, 0};
  }
  return best;
}

namespace {

// Parametrization of the constrained vector by (θ, y).
Eigen::Vector3d w_of(double theta, double y) {
  return {std::sinh(2 * y), -std::sin(2 * theta) * std::cosh(2 * y),
          std::cos(2 * theta) * std::cosh(2 * y)};
}

// Σ_k (part of [RᴴM_kR]_pq)², part = real for phase 0 and imaginary for π/2.
double measured_part(const std::vector<Eigen::MatrixXcd>& m, std::size_t p, std::size_t q,
                     double theta, double y, double phase) {
  const std::size_t n = m.front().rows();
  const Eigen::MatrixXcd r = to_eigen(dense_givens(n, p, q, theta, phase)) *
                             to_eigen(dense_hyperbolic(n, p, q, y, phase));
  double s = 0;
  for (const auto& x : m) {
    const cd e = (r.adjoint() * x * r)(p, q);
    const double part = phase == 0.0 ? e.real() : e.imag();
    s += part * part;
  }
  return s;
}

}  // namespace

std::vector<CjdiStep> cjdi_reference(std::vector<ComplexMatrix> input, int sweeps) {
  std::vector<Eigen::MatrixXcd> m;
  for (const auto& x : input) m.push_back(to_eigen(x));
  const std::size_t n = input.front().rows();
  const std::array<std::pair<double, double>, 10> samples{{{0.0, 0.0},
                                                           {0.3, 0.0},
                                                           {-0.2, 0.0},
                                                           {0.0, 0.4},
                                                           {0.0, -0.3},
                                                           {0.2, 0.3},
                                                           {-0.25, 0.2},
                                                           {0.35, -0.3},
                                                           {-0.1, -0.45},
                                                           {0.15, 0.5}}};
  Eigen::Matrix3d jm = Eigen::Vector3d(-1, 1, 1).asDiagonal();
  std::vector<CjdiStep> steps;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        for (double phase : {0.0, kPi / 2}) {
          // Fit the quadratic form f(w) = wᵀQw from measured entries.
          Eigen::MatrixXd design(samples.size(), 6);
          Eigen::VectorXd rhs(samples.size());
          for (std::size_t k = 0; k < samples.size(); ++k) {
            const auto [t, y] = samples[k];
            const Eigen::Vector3d w = w_of(t, y);
            design.row(k) << w[0] * w[0], w[1] * w[1], w[2] * w[2], 2 * w[0] * w[1],
                2 * w[0] * w[2], 2 * w[1] * w[2];
            rhs[k] = measured_part(m, p, q, t, y, phase);
          }
          const Eigen::VectorXd c = design.colPivHouseholderQr().solve(rhs);
          Eigen::Matrix3d qm;
          qm << c[0], c[3], c[4], c[3], c[1], c[5], c[4], c[5], c[2];

          Eigen::GeneralizedEigenSolver<Eigen::Matrix3d> ges(qm, jm);
          double best_lambda = std::numeric_limits<double>::infinity();
          Eigen::Vector3d best_w(0, 0, 1);
          bool found = false;
          const double scale = qm.norm();
          for (int i = 0; i < 3; ++i) {
            const cd lam = ges.alphas()[i] / ges.betas()[i];
            if (std::abs(lam.imag()) > 1e-9 * (1 + std::abs(lam))) continue;
            if (lam.real() < -1e-12 * std::max(scale, 1e-300)) continue;
            Eigen::Vector3cd z = ges.eigenvectors().col(i);
            Eigen::Index big;
            z.cwiseAbs().maxCoeff(&big);
            z *= std::conj(z[big]) / std::abs(z[big]);
            Eigen::Vector3d w = z.real().normalized();
            const double jn = w.dot(jm * w);
            if (jn <= 1e-12) continue;
            const bool tie = std::abs(lam.real() - best_lambda) <= 1e-12 * std::max(scale, 1e-300);
            if (!found || lam.real() < best_lambda - 1e-12 * std::max(scale, 1e-300) ||
                (tie && std::abs(w[2]) > std::abs(best_w[2]))) {
              best_lambda = lam.real();
              best_w = w / std::sqrt(jn);
              found = true;
            }
          }
          if (!found) continue;
          if (best_w[2] < 0) best_w = -best_w;
          CjdiStep st;
          st.p = p;
          st.q = q;
          st.phase = phase;
          st.theta = 0.5 * std::atan2(-best_w[1], best_w[2]);
          st.y = 0.5 * std::asinh(best_w[0]);
          steps.push_back(st);
          const Eigen::MatrixXcd r = to_eigen(dense_givens(n, p, q, st.theta, phase)) *
                                     to_eigen(dense_hyperbolic(n, p, q, st.y, phase));
          for (auto& x : m) x = (r.adjoint() * x * r).eval();
        }
      }
    }
  }
  return steps;
}

// ---- checks ----

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_gaussian(n, n, rng);
  return 0.5 * (x + adjoint(x));
}

}  // namespace

CheckResult check_co_grid(std::uint64_t seed, int instances) {
  Rng rng(seed);
  double worst_co = -std::numeric_limits<double>::infinity();
  double worst_ro = worst_co;
  for (int i = 0; i < instances; ++i) {
    std::vector<ComplexMatrix> m, n;
    for (int k = 0; k < 2; ++k) m.push_back(random_gaussian(2, 2, rng));
    for (int k = 0; k < 2; ++k) n.push_back(random_gaussian(2, 2, rng));
    const TargetSets sets = TargetSets::make(m, n);
    const GivensStep st = co_hjd_rotation(sets, 0, 1);
    const double closed = co_criterion(sets, st.params.theta, st.params.alpha);
    worst_co = std::max(worst_co, closed - co_grid(sets).value);
    const GivensStep rs = ro_rotation(sets, 0, 1);
    worst_ro = std::max(worst_ro, co_criterion(sets, rs.params.theta, rs.params.alpha) - ro_grid(sets).value);
  }
  return {worst_co <= 1e-6 && worst_ro <= 1e-6,
          "max(closed - grid): complex " + fmt(worst_co) + ", real " + fmt(worst_ro)};
}

CheckResult check_hcjdi_grid(std::uint64_t seed, int instances) {
  Rng rng(seed);
  double worst0 = -std::numeric_limits<double>::infinity(), worst1 = worst0;
  for (int i = 0; i < instances; ++i) {
    std::vector<ComplexMatrix> m, n;
    for (int k = 0; k < 2; ++k) m.push_back(random_gaussian(2, 2, rng));
    for (int k = 0; k < 2; ++k) n.push_back(random_gaussian(2, 2, rng));
    const HermitianizedSets hs = HermitianizedSets::from(TargetSets::make(m, n));
    const HyperbolicStep r0 = solve_r0(hs, 0, 1);
    worst0 = std::max(worst0, hcjdi_criterion(hs.Mt, hs.N, r0.params.theta, r0.params.y, 0.0) -
                                  hcjdi_grid(hs.Mt, hs.N, 0.0).value);
    const HyperbolicStep r1 = solve_rpi2(hs, 0, 1);
    worst1 = std::max(worst1,
                      hcjdi_criterion(hs.Mt, hs.N, r1.params.theta, r1.params.y, kPi / 2) -
                          hcjdi_grid(hs.Mt, hs.N, kPi / 2).value);
  }
  return {worst0 <= 1e-6 && worst1 <= 1e-6,
          "max(closed - grid): R(0) " + fmt(worst0) + ", R(pi/2) " + fmt(worst1)};
}

CheckResult check_lemma1(std::uint64_t seed, int instances) {
  Rng rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 3.0);
  double worst_im = 0, worst_orth = 0;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 5;
    const ComplexMatrix a = random_unitary(n, rng);
    ComplexMatrix l(n, n);
    for (std::size_t k = 0; k < n; ++k) l(k, k) = mag(rng);
    const ComplexMatrix n1 = a * l * transpose(a);
    const ComplexMatrix b = ro_transform(n1);
    const ComplexMatrix p = adjoint(b) * a;
    worst_im = std::max(worst_im, frobenius_norm(imag_part(p)) / frobenius_norm(p));
    worst_orth = std::max(worst_orth, frobenius_norm(p * transpose(p) - ComplexMatrix::identity(n)));
  }
  return {worst_im < 1e-8 && worst_orth < 1e-8,
          "max |Im(BᴴA)|/|BᴴA| " + fmt(worst_im) + ", max |PPᵀ - I| " + fmt(worst_orth)};
}

CheckResult check_cjdi_reduction(std::uint64_t seed, int instances) {
  Rng rng(seed);
  double worst = 0;
  std::size_t compared = 0;
  bool aligned = true;
  SweepConfig cfg;
  cfg.tau = 1e-30;
  cfg.max_sweeps = 3;
  cfg.record_rotations = true;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 4;
    const ComplexMatrix a = random_mixing(n, 10.0, rng);
    std::vector<ComplexMatrix> m;
    for (int k = 0; k < 3; ++k) {
      ComplexMatrix d(n, n);
      for (std::size_t j = 0; j < n; ++j) d(j, j) = random_cn(rng).real() * 2.0;
      m.push_back(a * d * adjoint(a) + 0.05 * random_hermitian(n, rng));
    }
    const JdResult res = h_cjdi(TargetSets::make(m, {}), cfg);
    const auto ref = cjdi_reference(m, cfg.max_sweeps);
    const auto& got = res.diagnostics.rotations;
    if (got.size() != ref.size()) {
      aligned = false;
      continue;
    }
    for (std::size_t k = 0; k < ref.size(); ++k) {
      if (got[k].p != ref[k].p || got[k].q != ref[k].q || got[k].alpha != ref[k].phase) {
        aligned = false;
        break;
      }
      worst = std::max({worst, std::abs(got[k].theta - ref[k].theta), std::abs(got[k].y - ref[k].y)});
      ++compared;
    }
  }
  return {aligned && worst <= 1e-10,
          std::to_string(compared) + " rotations compared, max parameter difference " + fmt(worst) +
              (aligned ? "" : ", sequence mismatch")};
}

CheckResult check_jacobi_reduction(std::uint64_t seed, int instances) {
  Rng rng(seed);
  double worst = 0;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 6;
    RealMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        std::normal_distribution<double> nd;
        s(r, c) = s(c, r) = nd(rng);
      }
    TargetSets sets = TargetSets::make({to_complex(s)}, {});
    co_hjd(sets, SweepConfig{});
    std::vector<double> diag(n);
    for (std::size_t k = 0; k < n; ++k) diag[k] = sets.M[0](k, k).real();
    std::sort(diag.begin(), diag.end());
    const auto ref = symmetric_eigenvalues(s);
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(diag[k] - ref[k]));
  }
  return {worst <= 1e-10, "max eigenvalue difference " + fmt(worst)};
}

CheckResult check_metrics(std::uint64_t seed, int instances) {
  Rng rng(seed);
  bool ok = true;
  std::ostringstream detail;
  const double pi_id = performance_index(ComplexMatrix::identity(4));
  ok = ok && pi_id == 0.0;
  double worst_perm = 0;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    ComplexMatrix p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      cd v = random_cn(rng);
      if (std::abs(v) < 1e-3) v = 1.0;
      p(k, perm[k]) = v;
    }
    worst_perm = std::max(worst_perm, performance_index(p));
  }
  ok = ok && worst_perm == 0.0;
  const double pi_ones = performance_index(ComplexMatrix(2, 2, 1.0));
  ok = ok && std::abs(pi_ones - 1.0) <= 1e-15;
  double worst_mou = 0;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 6);
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 10);
    DiagonalProfiles prof(n, std::vector<cd>(len));
    for (auto& d : prof)
      for (auto& x : d) x = random_cn(rng);
    worst_mou = std::max(worst_mou, std::abs(modulus_of_uniqueness(prof) - mou_gram(prof)));
  }
  ok = ok && worst_mou <= 1e-14;
  detail << "PI(I)=" << pi_id << ", max PI(ΠΛ)=" << worst_perm << ", PI(ones2)=" << pi_ones
         << ", max |MoU - brute force|=" << fmt(worst_mou);
  return {ok, detail.str()};
}

std::vector<std::string> check_names() {
  return {"co-grid", "hcjdi-grid", "lemma1", "cjdi-reduction", "jacobi-reduction", "metrics"};
}

CheckResult run_check(const std::string& name, std::uint64_t seed, int instances) {
  if (name == "co-grid") return check_co_grid(seed, instances);
  if (name == "hcjdi-grid") return check_hcjdi_grid(seed, instances);
  if (name == "lemma1") return check_lemma1(seed, instances);
  if (name == "cjdi-reduction") return check_cjdi_reduction(seed, instances);
  if (name == "jacobi-reduction") return check_jacobi_reduction(seed, instances);
  if (name == "metrics") return check_metrics(seed, instances);
  throw Error(ErrorKind::config, "unknown oracle '" + name + "'");
}

}  // namespace hjd::oracle
