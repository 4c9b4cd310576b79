// SPDX-License-Identifier: Apache-2.0
#include "hjd/aro.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hjd/errors.hpp"
#include "hjd/metrics.hpp"
#include "hjd/rotations.hpp"
#include "hjd/tolerances.hpp"
#include "sweep_util.hpp"

namespace hjd {

RealMatrix augment_mixing(const ComplexMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RealMatrix out(2 * m, 2 * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j).real();
      out(i, j + n) = -a(i, j).imag();
      out(i + m, j) = a(i, j).imag();
      out(i + m, j + n) = a(i, j).real();
    }
  return out;
}

RealMatrix augment_statistics(const ComplexMatrix& r, const ComplexMatrix& p) {
  if (!r.square() || r.rows() != p.rows() || r.cols() != p.cols())
    throw Error(ErrorKind::invalid_input, "augment_statistics: shape mismatch");
  const std::size_t n = r.rows();
  RealMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cd sum = r(i, j) + p(i, j);
      const cd diff = r(i, j) - p(i, j);
      out(i, j) = 0.5 * sum.real();
      out(i, j + n) = -0.5 * diff.imag();
      out(i + n, j) = 0.5 * sum.imag();
      out(i + n, j + n) = 0.5 * diff.real();
    }
  return symmetric_part(out);
}

AugmentedSet AugmentedSet::make(std::vector<RealMatrix> m) {
  if (m.empty()) throw Error(ErrorKind::invalid_input, "augmented set is empty");
  const std::size_t dim = m.front().rows();
  if (dim < 2 || dim % 2 != 0)
    throw Error(ErrorKind::invalid_input, "augmented matrices must be 2n x 2n");
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& x = m[k];
    const std::string tag = "Mbar[" + std::to_string(k) + "]";
    if (x.rows() != dim || x.cols() != dim)
      throw Error(ErrorKind::invalid_input, tag + " has wrong shape");
    if (!all_finite(x)) throw Error(ErrorKind::invalid_input, tag + " is not finite");
    if (frobenius_norm(x - transpose(x)) > tol::augmented_symmetry * frobenius_norm(x))
      throw Error(ErrorKind::invalid_input, tag + " is not symmetric");
    m[k] = symmetric_part(x);
  }
  AugmentedSet s;
  s.M = std::move(m);
  s.n = dim / 2;
  return s;
}

FVectors build_f_vectors(const RealMatrix& m, std::size_t n, std::size_t p, std::size_t q) {
  const std::size_t pn = p + n, qn = q + n;
  FVectors out;
  out.f[0] = {m(q, q) - m(p, p), m(p, q) + m(q, p)};
  out.f[1] = {m(qn, qn) - m(pn, pn), m(pn, qn) + m(qn, pn)};
  out.f[2] = {m(qn, qn) - m(p, p), m(p, qn) + m(qn, p)};
  out.f[3] = {m(pn, pn) - m(q, q), m(q, pn) + m(pn, q)};
  out.f[4] = {m(pn, pn) - m(p, p), m(p, pn) + m(pn, p)};
  return out;
}

namespace {

void add_outer(RealSym2& q, const Vec2& f) {
  q.a00 += f[0] * f[0];
  q.a01 += f[0] * f[1];
  q.a11 += f[1] * f[1];
}

RealGivens from_quadratic(const RealSym2& q) {
  const Vec2 v = sym2_principal_eigvec(q);
  const double c = std::sqrt(0.5 * (1.0 + v[0]));
  return {c, -v[1] / (2.0 * c)};
}

template <class Pick>
RealGivens solve(const AugmentedSet& set, std::size_t p, std::size_t q, Pick pick) {
  RealSym2 quad;
  for (const auto& m : set.M) {
    const FVectors fv = build_f_vectors(m, set.n, p, q);
    pick(quad, fv);
  }
  return from_quadratic(quad);
}

}  // namespace

RealGivens aro_rotation_theta(const AugmentedSet& set, std::size_t p, std::size_t q) {
  return solve(set, p, q, [](RealSym2& s, const FVectors& fv) {
    add_outer(s, fv.f[0]);
    add_outer(s, fv.f[1]);
  });
}

RealGivens aro_rotation_theta_prime(const AugmentedSet& set, std::size_t p, std::size_t q) {
  return solve(set, p, q, [](RealSym2& s, const FVectors& fv) {
    add_outer(s, fv.f[2]);
    add_outer(s, fv.f[3]);
  });
}

RealGivens aro_rotation_theta_dprime(const AugmentedSet& set, std::size_t p) {
  // q is unused by f5; any valid index keeps build_f_vectors in range.
  const std::size_t q = p + 1 < set.n ? p + 1 : 0;
  return solve(set, p, q, [](RealSym2& s, const FVectors& fv) { add_outer(s, fv.f[4]); });
}

void apply_paired_rotation(AugmentedSet& set, RealMatrix& v, PairKind kind, std::size_t p,
                           std::size_t q, const RealGivens& g) {
  const std::size_t n = set.n;
  auto rotate = [&](std::size_t a, std::size_t b) {
    for (auto& m : set.M) apply_real_congruence(m, g.c, g.s, a, b);
    accumulate_real(v, g.c, g.s, a, b);
  };
  switch (kind) {
    case PairKind::theta:
      rotate(p, q);
      rotate(p + n, q + n);
      break;
    case PairKind::theta_prime:
      rotate(p, q + n);
      rotate(q, p + n);
      break;
    case PairKind::theta_dprime:
      rotate(p, p + n);
      break;
  }
}

double aro_cost(const AugmentedSet& set) {
  double s = 0.0;
  for (const auto& m : set.M) s += off_energy(m);
  return s;
}

AroResult aro_hjd(AugmentedSet& set, const SweepConfig& config, const RealMatrix* mixing) {
  config.validate();
  const std::size_t n = set.n;
  AroResult out;
  out.V = RealMatrix::identity(2 * n);
  out.diagnostics.sweeps.push_back({0, aro_cost(set), 0.0, 0.0, detail::pi_of(out.V, mixing)});

  for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    double max_sin = 0.0;
    auto step = [&](PairKind kind, std::size_t p, std::size_t q, const RealGivens& g) {
      max_sin = std::max(max_sin, std::abs(g.s));
      if (g.s != 0.0) apply_paired_rotation(set, out.V, kind, p, q, g);
    };
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        step(PairKind::theta, p, q, aro_rotation_theta(set, p, q));
        step(PairKind::theta_prime, p, q, aro_rotation_theta_prime(set, p, q));
      }
      step(PairKind::theta_dprime, p, p, aro_rotation_theta_dprime(set, p));
    }
    out.diagnostics.sweeps.push_back(
        {sweep, aro_cost(set), max_sin, 0.0, detail::pi_of(out.V, mixing)});
    if (max_sin <= config.tau) {
      out.diagnostics.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace hjd
