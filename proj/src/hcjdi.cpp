// SPDX-License-Identifier: Apache-2.0
#include "hjd/hcjdi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hjd/metrics.hpp"
#include "hjd/tolerances.hpp"
#include "sweep_util.hpp"

namespace hjd {

namespace {
constexpr cd kJ{0.0, 1.0};
}

std::vector<ComplexMatrix> hermitianize(const std::vector<ComplexMatrix>& m) {
  std::vector<ComplexMatrix> out;
  out.reserve(2 * m.size());
  for (const auto& x : m) {
    const ComplexMatrix xh = adjoint(x);
    out.push_back(0.5 * (x + xh));
    out.push_back(cd{0.0, -0.5} * (x - xh));
  }
  return out;
}

std::vector<ComplexMatrix> symmetrize(std::vector<ComplexMatrix> n) {
  for (auto& x : n) x = symmetric_part(x);
  return n;
}

HermitianizedSets HermitianizedSets::from(const TargetSets& sets) {
  return {hermitianize(sets.M), symmetrize(sets.N), sets.n};
}

std::vector<Row3> build_e3(const std::vector<ComplexMatrix>& mt, std::size_t p, std::size_t q,
                           double scale) {
  std::vector<Row3> rows;
  for (const auto& x : mt)
    rows.push_back({scale * (x(p, p) + x(q, q)), scale * (x(p, p) - x(q, q)),
                    scale * 2.0 * x(p, q).real()});
  return rows;
}

std::vector<Row3> build_e4(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale) {
  std::vector<Row3> rows;
  for (const auto& x : n)
    rows.push_back({scale * (x(p, p) + x(q, q)), scale * (x(p, p) - x(q, q)),
                    scale * 2.0 * x(p, q)});
  return rows;
}

std::vector<Row3> build_e5(const std::vector<ComplexMatrix>& mt, std::size_t p, std::size_t q,
                           double scale) {
  const cd s = scale * kJ;
  std::vector<Row3> rows;
  for (const auto& x : mt)
    rows.push_back({-s * (x(p, p) + x(q, q)), s * (x(q, q) - x(p, p)),
                    s * 2.0 * x(p, q).imag()});
  return rows;
}

std::vector<Row3> build_e6(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale) {
  const cd s = scale * kJ;
  std::vector<Row3> rows;
  for (const auto& x : n)
    rows.push_back({s * (x(p, p) - x(q, q)), s * (x(p, p) + x(q, q)), -s * 2.0 * kJ * x(p, q)});
  return rows;
}

Block2 HyperbolicStep::block() const {
  const double phase = params.alpha;
  return givens_block_cs(cos_theta, std::polar(sin_theta, phase)) *
         hyperbolic_block_cs(cosh_y, sinh_y, phase);
}

HyperbolicStep step_from_w(const Vec3& w, double phase, double max_shear) {
  HyperbolicStep st;
  st.w = w;
  const double ch2y = std::sqrt(1.0 + w[0] * w[0]);
  const double cos2t = std::clamp(w[2] / ch2y, -1.0, 1.0);
  st.cos_theta = std::sqrt(0.5 * (1.0 + cos2t));
  st.sin_theta = -w[1] / (2.0 * st.cos_theta * ch2y);
  st.cosh_y = std::sqrt(0.5 * (1.0 + ch2y));
  st.sinh_y = w[0] / (2.0 * st.cosh_y);
  const double cap = std::sinh(max_shear);
  if (std::abs(st.sinh_y) > cap) {
    st.sinh_y = std::copysign(cap, st.sinh_y);
    st.cosh_y = std::cosh(max_shear);
  }
  st.params.theta = std::atan2(st.sin_theta, st.cos_theta);
  st.params.y = std::asinh(st.sinh_y);
  st.params.alpha = st.params.phi = phase;
  return st;
}

namespace {

HyperbolicStep solve_pencil(const std::vector<Row3>& a, const std::vector<Row3>& b,
                            double phase, std::size_t p, std::size_t q,
                            const SweepConfig& config) {
  RealSym3 quad;
  add_gram(quad, a, 1.0);
  add_gram(quad, b, 1.0);
  const PencilEigvec pe = jpencil_selected_eigvec(quad);
  HyperbolicStep st = step_from_w(pe.w, phase, config.max_shear);
  st.median_differs = pe.median_differs;
  st.params.p = p;
  st.params.q = q;
  return st;
}

void apply_step(HermitianizedSets& sets, ComplexMatrix& v, const Block2& r, std::size_t p,
                std::size_t q) {
  for (auto& m : sets.Mt) apply_hermitian_congruence(m, r, p, q);
  for (auto& n : sets.N) apply_transpose_congruence(n, r, p, q);
  accumulate(v, r, p, q);
}

}  // namespace

HyperbolicStep solve_r0(const HermitianizedSets& sets, std::size_t p, std::size_t q,
                        const SweepConfig& config) {
  const double s = config.hcjdi_e_scale;
  return solve_pencil(build_e3(sets.Mt, p, q, s), build_e4(sets.N, p, q, s), 0.0, p, q, config);
}

HyperbolicStep solve_rpi2(const HermitianizedSets& sets, std::size_t p, std::size_t q,
                          const SweepConfig& config) {
  const double s = config.hcjdi_e_scale;
  return solve_pencil(build_e5(sets.Mt, p, q, s), build_e6(sets.N, p, q, s),
                      std::numbers::pi / 2, p, q, config);
}

double hcjdi_cost(const HermitianizedSets& sets) {
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < sets.Mt.size(); k += 2)
    s += off_energy(sets.Mt[k] + kJ * sets.Mt[k + 1]);
  for (const auto& n : sets.N) s += off_energy(n);
  return s;
}

JdResult h_cjdi(const TargetSets& input, const SweepConfig& config, const ComplexMatrix* mixing) {
  config.validate();
  HermitianizedSets sets = HermitianizedSets::from(input);
  const std::size_t n = sets.n;
  JdResult out;
  out.V = ComplexMatrix::identity(n);
  Diagnostics& diag = out.diagnostics;
  diag.sweeps.push_back({0, hcjdi_cost(sets), 0.0, 0.0, detail::pi_of(out.V, mixing)});

  for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    double max_sin = 0.0, max_sinh = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        for (int axis = 0; axis < 2; ++axis) {
          HyperbolicStep st;
          try {
            st = axis == 0 ? solve_r0(sets, p, q, config) : solve_rpi2(sets, p, q, config);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::degenerate_pencil) throw;
            ++diag.skipped_rotations;
            continue;
          }
          if (st.median_differs) ++diag.median_mismatches;
          max_sin = std::max(max_sin, std::abs(st.sin_theta));
          max_sinh = std::max(max_sinh, std::abs(st.sinh_y));
          if (config.record_rotations) diag.rotations.push_back(st.params);
          if (st.sin_theta == 0.0 && st.sinh_y == 0.0) continue;
          apply_step(sets, out.V, st.block(), p, q);
        }
      }
    }
    diag.sweeps.push_back(
        {sweep, hcjdi_cost(sets), max_sin, max_sinh, detail::pi_of(out.V, mixing)});
    if (!(frobenius_norm(out.V) <= tol::divergence_norm) || !all_finite(out.V))
      throw DivergenceError("h_cjdi: diagonalizer norm exceeded the divergence guard", diag);
    if (std::max(max_sin, max_sinh) <= config.tau) {
      diag.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace hjd
