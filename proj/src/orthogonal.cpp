// SPDX-License-Identifier: Apache-2.0
#include "hjd/orthogonal.hpp"

#include <algorithm>
#include <cmath>

#include "hjd/errors.hpp"
#include "hjd/metrics.hpp"
#include "hjd/tolerances.hpp"
#include "sweep_util.hpp"

namespace hjd {

std::vector<Row3> build_e1(const std::vector<ComplexMatrix>& m, std::size_t p, std::size_t q) {
  constexpr cd j{0.0, 1.0};
  std::vector<Row3> rows;
  rows.reserve(m.size());
  for (const auto& x : m)
    rows.push_back({x(p, p) - x(q, q), -(x(p, q) + x(q, p)), j * (x(q, p) - x(p, q))});
  return rows;
}

std::vector<Row3> build_e2(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale) {
  constexpr cd j{0.0, 1.0};
  std::vector<Row3> rows;
  rows.reserve(n.size());
  for (const auto& x : n)
    rows.push_back({scale * 2.0 * x(p, q), scale * (x(p, p) - x(q, q)),
                    scale * j * (x(p, p) + x(q, q))});
  return rows;
}

void add_gram(RealSym3& q, const std::vector<Row3>& rows, double sign) {
  for (const auto& e : rows)
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) q.add(a, b, sign * (std::conj(e[a]) * e[b]).real());
}

namespace {

RealSym3 co_quadratic(const TargetSets& sets, std::size_t p, std::size_t q, double e2_scale) {
  RealSym3 quad;
  add_gram(quad, build_e1(sets.M, p, q), 1.0);
  add_gram(quad, build_e2(sets.N, p, q, e2_scale), -1.0);
  return quad;
}

GivensStep make_step(double c, cd g, std::size_t p, std::size_t q) {
  GivensStep st;
  st.c = c;
  st.g = g;
  st.params.p = p;
  st.params.q = q;
  st.params.theta = std::atan2(std::abs(g), c);
  st.params.alpha = std::abs(g) > 0.0 ? std::arg(g) : 0.0;
  return st;
}

void apply_unitary_step(TargetSets& sets, ComplexMatrix& v, const Block2& r, std::size_t p,
                        std::size_t q) {
  for (auto& m : sets.M) apply_hermitian_congruence(m, r, p, q);
  for (auto& n : sets.N) apply_transpose_congruence(n, r, p, q);
  accumulate(v, r, p, q);
}

template <class StepFn>
JdResult run_sweeps(TargetSets& sets, ComplexMatrix v, const SweepConfig& config,
                    const ComplexMatrix* mixing, StepFn step) {
  config.validate();
  JdResult out;
  out.diagnostics.sweeps.push_back({0, jd_cost(sets), 0.0, 0.0, detail::pi_of(v, mixing)});
  const std::size_t n = sets.n;
  for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    double max_sin = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const GivensStep st = step(sets, p, q);
        max_sin = std::max(max_sin, std::abs(st.g));
        if (config.record_rotations) out.diagnostics.rotations.push_back(st.params);
        if (st.g == cd{0.0}) continue;
        apply_unitary_step(sets, v, st.block(), p, q);
      }
    }
    out.diagnostics.sweeps.push_back({sweep, jd_cost(sets), max_sin, 0.0, detail::pi_of(v, mixing)});
    if (max_sin <= config.tau) {
      out.diagnostics.converged = true;
      break;
    }
  }
  out.V = std::move(v);
  return out;
}

}  // namespace

GivensStep co_hjd_rotation(const TargetSets& sets, std::size_t p, std::size_t q,
                           double e2_scale) {
  const Vec3 v = sym3_principal_eigvec(co_quadratic(sets, p, q, e2_scale));
  const double c = std::sqrt(0.5 * (1.0 + v[0]));
  const cd g = -cd{v[1], v[2]} / (2.0 * c);
  return make_step(c, g, p, q);
}

JdResult co_hjd(TargetSets& sets, const SweepConfig& config, const ComplexMatrix* mixing) {
  const double scale = config.co_e2_scale;
  return run_sweeps(sets, ComplexMatrix::identity(sets.n), config, mixing,
                    [scale](const TargetSets& s, std::size_t p, std::size_t q) {
                      return co_hjd_rotation(s, p, q, scale);
                    });
}

ComplexMatrix ro_transform(const ComplexMatrix& n1) {
  if (!n1.square()) throw Error(ErrorKind::invalid_input, "ro_transform: N1 not square");
  const Svd s = svd(n1);
  if (!(s.sigma.back() > tol::rank * s.sigma.front()))
    throw Error(ErrorKind::rank_deficient, "ro_transform: N1 is rank deficient");
  const ComplexMatrix t = symmetric_part(adjoint(s.U) * n1 * conj(s.U));
  return s.U * takagi(t).E;
}

GivensStep ro_rotation(const TargetSets& sets, std::size_t p, std::size_t q, double e2_scale) {
  const RealSym3 quad = co_quadratic(sets, p, q, e2_scale);
  const Vec2 v = sym2_principal_eigvec({quad.a00, quad.a01, quad.a11});
  const double c = std::sqrt(0.5 * (1.0 + v[0]));
  const double s = -v[1] / (2.0 * c);
  return make_step(c, cd{s}, p, q);
}

JdResult ro_hjd(TargetSets& sets, const SweepConfig& config, const ComplexMatrix* mixing) {
  if (sets.N.empty()) throw Error(ErrorKind::invalid_input, "ro_hjd: needs at least one N matrix");
  const ComplexMatrix b = ro_transform(sets.N.front());
  const ComplexMatrix bh = adjoint(b);
  const ComplexMatrix bc = conj(b);
  for (auto& m : sets.M) m = bh * m * b;
  for (auto& n : sets.N) n = symmetric_part(bh * n * bc);
  const double scale = config.co_e2_scale;
  return run_sweeps(sets, b, config, mixing,
                    [scale](const TargetSets& s, std::size_t p, std::size_t q) {
                      return ro_rotation(s, p, q, scale);
                    });
}

}  // namespace hjd
