// SPDX-License-Identifier: Apache-2.0
#include "hjd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hjd/errors.hpp"
#include "hjd/tolerances.hpp"

namespace hjd {

namespace {

void require_finite(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::invalid_input, std::string(what) + ": non-finite input");
}

bool finite3(const RealSym3& q) {
  return std::isfinite(q.a00) && std::isfinite(q.a01) && std::isfinite(q.a02) &&
         std::isfinite(q.a11) && std::isfinite(q.a12) && std::isfinite(q.a22);
}

// Jacobi tangent for the pair with diagonal (app, aqq) and coupling apq:
// the rotation [[c, s], [-s, c]] zeroes apq.
double jacobi_tangent(double app, double aqq, double apq) {
  const double tau = (aqq - app) / (2.0 * apq);
  if (std::abs(tau) > 1e150) return 0.5 / tau;
  const double t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  return tau >= 0 ? t : -t;
}

}  // namespace

double RealSym2::operator()(int i, int j) const noexcept {
  if (i == j) return i == 0 ? a00 : a11;
  return a01;
}

double RealSym2::frobenius_norm() const noexcept {
  return std::sqrt(a00 * a00 + a11 * a11 + 2 * a01 * a01);
}

double RealSym3::operator()(int i, int j) const noexcept {
  if (i > j) std::swap(i, j);
  switch (i * 3 + j) {
    case 0: return a00;
    case 1: return a01;
    case 2: return a02;
    case 4: return a11;
    case 5: return a12;
    default: return a22;
  }
}

void RealSym3::add(int i, int j, double v) noexcept {
  switch (i * 3 + j) {
    case 0: a00 += v; break;
    case 1: a01 += v; break;
    case 2: a02 += v; break;
    case 4: a11 += v; break;
    case 5: a12 += v; break;
    case 8: a22 += v; break;
    default: break;
  }
}

RealMatrix RealSym3::dense() const {
  RealMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double RealSym3::frobenius_norm() const noexcept {
  return std::sqrt(a00 * a00 + a11 * a11 + a22 * a22 +
                   2 * (a01 * a01 + a02 * a02 + a12 * a12));
}

SymmetricEigen symmetric_eigen(RealMatrix a) {
  if (!a.square()) throw Error(ErrorKind::invalid_input, "symmetric_eigen: matrix not square");
  require_finite(all_finite(a), "symmetric_eigen");
  const std::size_t n = a.rows();
  RealMatrix v = RealMatrix::identity(n);

  const double total = frobenius_norm_sq(a);
  for (int sweep = 0; sweep < tol::kernel_max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-32 * total || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double t = jacobi_tangent(a(p, p), a(q, q), apq);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SymmetricEigen out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  out.vectors = std::move(v);
  return out;
}

Vec3 sym3_principal_eigvec(const RealSym3& q) {
  require_finite(finite3(q), "sym3_principal_eigvec");
  const SymmetricEigen eig = symmetric_eigen(q.dense());

  double vmax = -std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (double x : eig.values) {
    vmax = std::max(vmax, x);
    scale = std::max(scale, std::abs(x));
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (eig.values[i] >= vmax - tol::eig_tie * scale) {
      best = i;
      break;
    }
  }

  Vec3 v{eig.vectors(0, best), eig.vectors(1, best), eig.vectors(2, best)};
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& x : v) x /= norm;
  for (double x : v) {
    if (x == 0.0) continue;
    if (x < 0.0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Vec2 sym2_principal_eigvec(const RealSym2& q) {
  require_finite(std::isfinite(q.a00) && std::isfinite(q.a01) && std::isfinite(q.a11),
                 "sym2_principal_eigvec");
  const double half_diff = 0.5 * (q.a00 - q.a11);
  const double radius = std::hypot(half_diff, q.a01);
  const double scale = std::abs(0.5 * (q.a00 + q.a11)) + radius;
  if (radius <= tol::eig_tie * scale) return {1.0, 0.0};
  if (q.a01 == 0.0) return q.a00 >= q.a11 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};

  // 2φ = atan2(2b, a - c) maximizes the Rayleigh quotient; φ ∈ (-π/2, π/2].
  const double phi = 0.5 * std::atan2(q.a01, half_diff);
  Vec2 v{std::cos(phi), std::sin(phi)};
  if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) v = {-v[0], -v[1]};
  return v;
}

PencilEigvec jpencil_selected_eigvec(const RealSym3& q) {
  require_finite(finite3(q), "jpencil_selected_eigvec");

  Eigen::Matrix3d jq;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) jq(i, j) = (i == 0 ? -1.0 : 1.0) * q(i, j);

  Eigen::EigenSolver<Eigen::Matrix3d> es(jq, true);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::degenerate_pencil, "pencil eigen solver did not converge");

  const double qnorm = q.frobenius_norm();
  const double neg_tol = tol::pencil_negative * std::max(qnorm, 1e-300);

  struct Candidate {
    double lambda;
    Vec3 w;
    double jnorm;
  };
  std::vector<Candidate> candidates;
  std::vector<std::pair<double, Vec3>> real_vectors;  // every real eigenpair, unit norm
  std::array<double, 3> real_parts{};

  for (int i = 0; i < 3; ++i) {
    const std::complex<double> lambda = es.eigenvalues()[i];
    real_parts[i] = lambda.real();
    if (std::abs(lambda.imag()) > tol::pencil_imag * (1.0 + std::abs(lambda))) continue;
    if (lambda.real() < -neg_tol) continue;

    Eigen::Vector3cd z = es.eigenvectors().col(i);
    int big = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(z[k]) > std::abs(z[big])) big = k;
    const std::complex<double> phase = std::conj(z[big]) / std::abs(z[big]);
    Vec3 w{(z[0] * phase).real(), (z[1] * phase).real(), (z[2] * phase).real()};
    const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    for (auto& x : w) x /= norm;
    real_vectors.push_back({lambda.real(), w});
    const double jnorm = -w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    if (jnorm <= tol::pencil_jnorm) continue;
    candidates.push_back({lambda.real(), w, jnorm});
  }
  if (candidates.empty())
    throw Error(ErrorKind::degenerate_pencil, "no J-positive non-negative pencil eigenvalue");

  double lmin = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) lmin = std::min(lmin, c.lambda);
  const double tie = tol::eig_tie * std::max(qnorm, 1e-300);
  const Candidate* chosen = nullptr;
  for (const auto& c : candidates) {
    if (c.lambda > lmin + tie) continue;
    if (!chosen || std::abs(c.w[2]) > std::abs(chosen->w[2])) chosen = &c;
  }

  Vec3 w = chosen->w;
  double jnorm = chosen->jnorm;

  // Repeated eigenvalue: any vector of the eigenspace solves the pencil, so
  // take the one nearest to e3 (the identity rotation).
  std::vector<Vec3> basis;
  for (const auto& [lambda, v] : real_vectors) {
    if (std::abs(lambda - chosen->lambda) > tie) continue;
    Vec3 u = v;
    for (const auto& b : basis) {
      const double d = u[0] * b[0] + u[1] * b[1] + u[2] * b[2];
      for (int k = 0; k < 3; ++k) u[k] -= d * b[k];
    }
    const double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    if (un > 1e-8) basis.push_back({u[0] / un, u[1] / un, u[2] / un});
  }
  if (basis.size() >= 2) {
    Vec3 proj{0, 0, 0};
    for (const auto& b : basis)
      for (int k = 0; k < 3; ++k) proj[k] += b[2] * b[k];
    const double pn = std::sqrt(proj[0] * proj[0] + proj[1] * proj[1] + proj[2] * proj[2]);
    if (pn > 1e-8) {
      for (auto& x : proj) x /= pn;
      const double pj = -proj[0] * proj[0] + proj[1] * proj[1] + proj[2] * proj[2];
      if (pj > tol::pencil_jnorm) {
        w = proj;
        jnorm = pj;
      }
    }
  }

  PencilEigvec out;
  out.w = w;
  if (out.w[2] < 0.0)
    for (auto& x : out.w) x = -x;
  const double scale = 1.0 / std::sqrt(jnorm);
  for (auto& x : out.w) x *= scale;
  // Rayleigh-type quotient: for an exact eigenvector wᵀQw = λ·wᵀJw = λ.
  double rq = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rq += out.w[i] * q(i, j) * out.w[j];
  out.lambda = rq;

  std::sort(real_parts.begin(), real_parts.end());
  out.median_differs =
      std::abs(chosen->lambda - real_parts[1]) > 1e-9 * (1.0 + std::abs(real_parts[1]));
  return out;
}

Takagi takagi(const ComplexMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::invalid_input, "takagi: matrix not square");
  require_finite(all_finite(t), "takagi");
  const double tnorm = frobenius_norm(t);
  if (frobenius_norm(t - transpose(t)) > tol::symmetry * tnorm)
    throw Error(ErrorKind::invalid_input, "takagi: matrix not symmetric");
  const ComplexMatrix s = symmetric_part(t);
  const std::size_t n = s.rows();

  // [[Re S, Im S], [Im S, -Re S]] has eigenpairs (±σ); for σ >= 0 the
  // eigenvector [x; y] gives the Takagi vector x + jy.
  RealMatrix h(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = s(i, j).real();
      h(i, j + n) = s(i, j).imag();
      h(i + n, j) = s(i, j).imag();
      h(i + n, j + n) = -s(i, j).real();
    }
  }
  const SymmetricEigen eig = symmetric_eigen(std::move(h));
  std::vector<std::size_t> order(2 * n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eig.values[a] > eig.values[b]; });

  Takagi out{ComplexMatrix(n, n), std::vector<double>(n, 0.0)};
  std::size_t accepted = 0;
  std::vector<cd> e(n);
  for (std::size_t idx : order) {
    if (accepted == n) break;
    for (std::size_t i = 0; i < n; ++i) e[i] = {eig.vectors(i, idx), eig.vectors(i + n, idx)};
    // Zero Takagi values pair [x; y] with [-y; x] (i.e. e and j·e); keep one.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < accepted; ++c) {
        cd dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(out.E(i, c)) * e[i];
        for (std::size_t i = 0; i < n; ++i) e[i] -= dot * out.E(i, c);
      }
    }
    double norm = 0;
    for (const auto& x : e) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 0.5) continue;
    for (std::size_t i = 0; i < n; ++i) out.E(i, accepted) = e[i] / norm;
    out.sigma[accepted] = std::max(0.0, eig.values[idx]);
    ++accepted;
  }
  if (accepted != n) throw Error(ErrorKind::invalid_input, "takagi: failed to build a unitary basis");
  return out;
}

Svd svd(const ComplexMatrix& x) {
  const std::size_t m = x.rows(), n = x.cols();
  if (m < n) throw Error(ErrorKind::invalid_input, "svd: requires rows >= cols");
  require_finite(all_finite(x), "svd");

  ComplexMatrix w = x;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (int sweep = 0; sweep < tol::kernel_max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double a = 0, b = 0;
        cd c = 0;
        for (std::size_t k = 0; k < m; ++k) {
          a += std::norm(w(k, i));
          b += std::norm(w(k, j));
          c += std::conj(w(k, i)) * w(k, j);
        }
        const double cabs = std::abs(c);
        if (cabs == 0.0 || cabs <= 1e-15 * std::sqrt(a * b)) continue;
        rotated = true;
        // Rotate by diag(1, e^{-jφ}) then a real Jacobi rotation.
        const cd phase = std::conj(c) / cabs;
        const double t = jacobi_tangent(a, b, cabs);
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        for (std::size_t k = 0; k < m; ++k) {
          const cd wi = w(k, i), wj = phase * w(k, j);
          w(k, i) = cs * wi - sn * wj;
          w(k, j) = sn * wi + cs * wj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cd vi = v(k, i), vj = phase * v(k, j);
          v(k, i) = cs * vi - sn * vj;
          v(k, j) = sn * vi + cs * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t k = 0; k < m; ++k) s += std::norm(w(k, j));
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  Svd out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n)};
  const double smax = n ? sigma[order[0]] : 0.0;
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(smax, 1e-300) * m;
  std::vector<bool> filled(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t j = order[c];
    out.sigma[c] = sigma[j];
    for (std::size_t k = 0; k < n; ++k) out.V(k, c) = v(k, j);
    if (sigma[j] > tiny) {
      for (std::size_t k = 0; k < m; ++k) out.U(k, c) = w(k, j) / sigma[j];
      filled[c] = true;
    }
  }
  // Complete null directions with canonical basis vectors, then
  // re-orthonormalize so tiny singular values do not spoil UᴴU = I.
  std::size_t basis = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (filled[c]) continue;
    for (; basis < m; ++basis) {
      std::vector<cd> e(m, 0.0);
      e[basis] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t d = 0; d < n; ++d) {
          if (!filled[d]) continue;
          cd dot = 0;
          for (std::size_t k = 0; k < m; ++k) dot += std::conj(out.U(k, d)) * e[k];
          for (std::size_t k = 0; k < m; ++k) e[k] -= dot * out.U(k, d);
        }
      }
      double norm = 0;
      for (const auto& z : e) norm += std::norm(z);
      norm = std::sqrt(norm);
      if (norm > 0.5) {
        for (std::size_t k = 0; k < m; ++k) out.U(k, c) = e[k] / norm;
        filled[c] = true;
        ++basis;
        break;
      }
    }
  }
  out.U = orthonormal_columns(std::move(out.U));
  return out;
}

ComplexMatrix left_singular_vectors(const ComplexMatrix& x) {
  if (!x.square()) throw Error(ErrorKind::invalid_input, "left_singular_vectors: not square");
  return svd(x).U;
}

ComplexMatrix orthonormal_columns(ComplexMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < j; ++c) {
        cd dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += std::conj(a(k, c)) * a(k, j);
        for (std::size_t k = 0; k < m; ++k) a(k, j) -= dot * a(k, c);
      }
    }
    double norm = 0;
    for (std::size_t k = 0; k < m; ++k) norm += std::norm(a(k, j));
    norm = std::sqrt(norm);
    if (!(norm > 0.0))
      throw Error(ErrorKind::rank_deficient, "orthonormal_columns: dependent columns");
    for (std::size_t k = 0; k < m; ++k) a(k, j) /= norm;
  }
  return a;
}

}  // namespace hjd
