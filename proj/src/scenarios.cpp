// SPDX-License-Identifier: Apache-2.0
#include "hjd/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hjd/errors.hpp"
#include "hjd/linalg.hpp"
#include "hjd/tolerances.hpp"

namespace hjd {

namespace {

double std_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

ComplexMatrix diag_congruence(const ComplexMatrix& a, const std::vector<cd>& d, bool transpose) {
  // A diag(d) Aᴴ  or  A diag(d) Aᵀ
  const std::size_t m = a.rows(), n = a.cols();
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      cd s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const cd right = transpose ? a(j, k) : std::conj(a(j, k));
        s += a(i, k) * d[k] * right;
      }
      out(i, j) = s;
    }
  return out;
}

// Lower Cholesky factor of a symmetric positive definite matrix.
RealMatrix cholesky(const RealMatrix& c) {
  const std::size_t n = c.rows();
  RealMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = c(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw Error(ErrorKind::invalid_input, "cholesky: matrix not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = c(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) + index);
}

cd random_cn(Rng& rng) {
  const double a = std_normal(rng);
  const double b = std_normal(rng);
  return {a * std::numbers::sqrt2 / 2, b * std::numbers::sqrt2 / 2};
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& x : g.entries()) x = random_cn(rng);
  return g;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  return orthonormal_columns(random_gaussian(n, n, rng));
}

ComplexMatrix random_mixing(std::size_t n, std::optional<double> cond_target, Rng& rng) {
  if (!cond_target) return random_gaussian(n, n, rng);
  if (!(*cond_target >= 1.0)) throw Error(ErrorKind::invalid_input, "cond_target must be >= 1");
  const ComplexMatrix u = random_unitary(n, rng);
  const ComplexMatrix w = random_unitary(n, rng);
  ComplexMatrix us = u;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = n > 1 ? static_cast<double>(j) / static_cast<double>(n - 1) : 0.0;
    const double sigma = std::pow(*cond_target, -t);
    for (std::size_t i = 0; i < n; ++i) us(i, j) *= sigma;
  }
  return us * adjoint(w);
}

void ScenarioSpec::validate() const {
  if (n < 2) throw Error(ErrorKind::config, "scenario.n must be >= 2");
  if (K1 + K2 < 1) throw Error(ErrorKind::config, "scenario.K1 + scenario.K2 must be >= 1");
  if (cond_target && !(*cond_target >= 1.0))
    throw Error(ErrorKind::config, "scenario.cond_target must be >= 1");
  if (mou_target && !(*mou_target >= 0.0 && *mou_target < 1.0))
    throw Error(ErrorKind::config, "scenario.mou_target must be in [0, 1)");
  if (snr_db && !std::isfinite(*snr_db)) throw Error(ErrorKind::config, "scenario.snr_db must be finite");
}

DiagonalProfiles diagonal_profiles(const GroundTruth& truth) {
  const std::size_t n = truth.A.cols();
  DiagonalProfiles prof(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& d : truth.D) prof[i].push_back(d[i]);
    for (const auto& l : truth.L) prof[i].push_back(l[i]);
  }
  return prof;
}

Problem gen_problem(const ScenarioSpec& spec, Rng& rng) {
  spec.validate();
  const std::size_t n = spec.n;
  GroundTruth truth;
  truth.A = random_mixing(n, spec.cond_target, rng);
  truth.D.assign(spec.K1, std::vector<cd>(n));
  truth.L.assign(spec.K2, std::vector<cd>(n));
  for (auto& d : truth.D)
    for (auto& x : d) x = random_cn(rng);
  for (auto& l : truth.L)
    for (auto& x : l) x = random_cn(rng);

  if (spec.mou_target) {
    std::vector<cd> g(std::max(spec.K1, spec.K2));
    for (auto& x : g) x = random_cn(rng);
    const auto base_d = truth.D;
    const auto base_l = truth.L;
    auto mou_at = [&](double eps) {
      for (std::size_t k = 0; k < spec.K1; ++k) truth.D[k][1] = base_d[k][0] + eps * g[k];
      for (std::size_t k = 0; k < spec.K2; ++k) truth.L[k][1] = base_l[k][0] + eps * g[k];
      return modulus_of_uniqueness(diagonal_profiles(truth));
    };
    const double target = *spec.mou_target;
    double lo = 0.0, hi = 1.0;
    while (mou_at(hi) >= target && hi < 1e6) hi *= 2.0;
    int it = 0;
    for (; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mou_at(mid) >= target)
        lo = mid;
      else
        hi = mid;
      if (mou_at(lo) - target <= 1e-9) {
        ++it;
        break;
      }
    }
    truth.epsilon = lo;
    truth.bisection_iterations = it;
    mou_at(lo);
  }
  truth.mou = modulus_of_uniqueness(diagonal_profiles(truth));

  std::vector<ComplexMatrix> ms, ns;
  for (const auto& d : truth.D) ms.push_back(diag_congruence(truth.A, d, false));
  for (const auto& l : truth.L) ns.push_back(symmetric_part(diag_congruence(truth.A, l, true)));
  if (spec.snr_db) {
    const double ratio = snr_amplitude_ratio(*spec.snr_db, spec.snr_convention);
    for (auto& m : ms) {
      const ComplexMatrix b = random_gaussian(n, n, rng);
      const double delta = frobenius_norm(m) / (ratio * frobenius_norm(b));
      m += delta * b;
    }
    for (auto& x : ns) {
      const ComplexMatrix b = symmetric_part(random_gaussian(n, n, rng));
      const double delta = frobenius_norm(x) / (ratio * frobenius_norm(b));
      x += delta * b;
    }
  }
  return {TargetSets::make(std::move(ms), std::move(ns)), std::move(truth)};
}

AugmentedProblem gen_augmented_problem(const ScenarioSpec& spec, const ComplexMatrix& a,
                                       Rng& rng) {
  const RealMatrix abar = augment_mixing(a);
  const std::size_t dim = abar.rows();
  std::vector<RealMatrix> ms;
  for (std::size_t k = 0; k < spec.K1 + spec.K2; ++k) {
    RealMatrix scaled = abar;
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = std_normal(rng);
      for (std::size_t i = 0; i < dim; ++i) scaled(i, j) *= d;
    }
    ms.push_back(symmetric_part(scaled * transpose(abar)));
  }
  if (spec.snr_db) {
    const double ratio = snr_amplitude_ratio(*spec.snr_db, spec.snr_convention);
    for (auto& m : ms) {
      RealMatrix b(dim, dim);
      for (auto& x : b.entries()) x = std_normal(rng);
      b = symmetric_part(b);
      const double delta = frobenius_norm(m) / (ratio * frobenius_norm(b));
      m += delta * b;
    }
  }
  return {AugmentedSet::make(std::move(ms)), abar};
}

// ---- source separation ----

std::vector<cd> BssSpec::coefficients() const {
  if (!ar_coeffs.empty()) return ar_coeffs;
  const std::vector<cd> base{0.95, std::polar(0.85, std::numbers::pi / 4),
                             std::polar(0.7, std::numbers::pi / 6)};
  std::vector<cd> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = base[i % base.size()];
  return out;
}

void BssSpec::validate() const {
  if (n < 2) throw Error(ErrorKind::config, "bss.n must be >= 2");
  if (m < n) throw Error(ErrorKind::config, "bss.m must be >= bss.n");
  if (T < 2) throw Error(ErrorKind::config, "bss.T must be >= 2");
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error(ErrorKind::config, "bss.rho must be in [0, 1]");
  if (!ar_coeffs.empty() && ar_coeffs.size() != n)
    throw Error(ErrorKind::config, "bss.ar_coeffs must have n entries");
  for (const auto& a : coefficients())
    if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::config, "bss.ar_coeffs must satisfy |a| < 1");
  if (!(coupling >= 0.0 && coupling < 1.0))
    throw Error(ErrorKind::config, "bss.coupling must be in [0, 1)");
  if (lags_M.empty() && lags_N.empty()) throw Error(ErrorKind::config, "bss lags are empty");
  for (auto l : lags_M)
    if (l >= T) throw Error(ErrorKind::config, "bss.lags_M entry exceeds T");
  for (auto l : lags_N)
    if (l >= T) throw Error(ErrorKind::config, "bss.lags_N entry exceeds T");
}

ComplexMatrix gen_ar1_sources(const BssSpec& spec, Rng& rng) {
  spec.validate();
  const double r = spec.rho / std::numbers::sqrt2;
  RealMatrix c(2, 2);
  c(0, 0) = 0.5 * (1.0 + r);
  c(1, 1) = 0.5 * (1.0 - r);
  c(0, 1) = c(1, 0) = spec.innovation == Innovation::C1 ? 0.5 * r : 0.0;
  // C1 is singular at ρ = 1, so factor by hand rather than via cholesky().
  const double l00 = std::sqrt(c(0, 0));
  const double l10 = c(1, 0) / l00;
  const double l11 = std::sqrt(std::max(0.0, c(1, 1) - l10 * l10));

  const auto coeffs = spec.coefficients();
  ComplexMatrix s(spec.n, spec.T);
  for (std::size_t i = 0; i < spec.n; ++i) {
    cd state = 0.0;
    for (std::size_t t = 0; t < spec.burn_in + spec.T; ++t) {
      const double z1 = std_normal(rng), z2 = std_normal(rng);
      state = coeffs[i] * state + cd{l00 * z1, l10 * z1 + l11 * z2};
      if (t >= spec.burn_in) s(i, t - spec.burn_in) = state;
    }
    double power = 0.0;
    for (std::size_t t = 0; t < spec.T; ++t) power += std::norm(s(i, t));
    const double scale = 1.0 / std::sqrt(power / static_cast<double>(spec.T));
    for (std::size_t t = 0; t < spec.T; ++t) s(i, t) *= scale;
  }
  return s;
}

RealMatrix noise_covariance(const BssSpec& spec) {
  RealMatrix c = RealMatrix::identity(spec.m);
  if (spec.noise == NoiseKind::colored)
    for (std::size_t i = 0; i < spec.m; ++i)
      for (std::size_t j = 0; j < spec.m; ++j)
        c(i, j) = std::pow(spec.coupling, std::abs(static_cast<double>(i) - static_cast<double>(j)));
  return c;
}

Observation mix_observe(const ComplexMatrix& a, const ComplexMatrix& s, const BssSpec& spec,
                        Rng& rng) {
  if (a.cols() != s.rows()) throw Error(ErrorKind::invalid_input, "mix_observe: shape mismatch");
  Observation obs;
  obs.X = a * s;
  obs.noise = ComplexMatrix(a.rows(), s.cols());
  if (!spec.snr_db) return obs;
  const ComplexMatrix white = random_gaussian(a.rows(), s.cols(), rng);
  const ComplexMatrix shaped =
      spec.noise == NoiseKind::colored ? to_complex(cholesky(noise_covariance(spec))) * white : white;
  const double ratio = snr_amplitude_ratio(*spec.snr_db, spec.snr_convention);
  const double delta = frobenius_norm(obs.X) / (ratio * frobenius_norm(shaped));
  obs.noise = delta * shaped;
  obs.X += obs.noise;
  return obs;
}

namespace {

ComplexMatrix lagged(const ComplexMatrix& x, std::size_t lag, bool hermitian) {
  const std::size_t m = x.rows(), T = x.cols();
  if (lag >= T) throw Error(ErrorKind::invalid_input, "lag exceeds the record length");
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      cd s = 0.0;
      for (std::size_t t = 0; t + lag < T; ++t) {
        const cd b = hermitian ? std::conj(x(j, t)) : x(j, t);
        s += x(i, t + lag) * b;
      }
      out(i, j) = s / static_cast<double>(T - lag);
    }
  return out;
}

}  // namespace

ComplexMatrix correlation(const ComplexMatrix& x, std::size_t lag) { return lagged(x, lag, true); }

ComplexMatrix pseudo_correlation(const ComplexMatrix& x, std::size_t lag) {
  return lagged(x, lag, false);
}

TargetSets estimate_statistics(const ComplexMatrix& x, const std::vector<std::size_t>& lags_M,
                               const std::vector<std::size_t>& lags_N) {
  std::vector<ComplexMatrix> ms, ns;
  for (auto l : lags_M) ms.push_back(correlation(x, l));
  for (auto l : lags_N) ns.push_back(pseudo_correlation(x, l));
  return TargetSets::make(std::move(ms), std::move(ns));
}

ComplexMatrix whitening_matrix(const ComplexMatrix& covariance, std::size_t n_sources) {
  if (!covariance.square() || n_sources == 0 || n_sources > covariance.rows())
    throw Error(ErrorKind::invalid_input, "whitening_matrix: bad shape or source count");
  const Svd s = svd(0.5 * (covariance + adjoint(covariance)));
  if (!(s.sigma[n_sources - 1] > tol::whitening_rank * s.sigma.front()))
    throw Error(ErrorKind::rank_deficient, "covariance rank is below the number of sources");
  ComplexMatrix w(n_sources, covariance.rows());
  for (std::size_t i = 0; i < n_sources; ++i) {
    const double scale = 1.0 / std::sqrt(s.sigma[i]);
    for (std::size_t j = 0; j < covariance.rows(); ++j) w(i, j) = scale * std::conj(s.U(j, i));
  }
  return w;
}

Whitening prewhiten(const ComplexMatrix& x, std::size_t n_sources) {
  Whitening out;
  out.W = whitening_matrix(correlation(x, 0), n_sources);
  out.Z = out.W * x;
  return out;
}

BssProblem gen_bss_problem(const BssSpec& spec, const ComplexMatrix& a, Rng& rng) {
  spec.validate();
  if (a.rows() != spec.m || a.cols() != spec.n)
    throw Error(ErrorKind::invalid_input, "gen_bss_problem: mixing has wrong shape");
  const ComplexMatrix s = gen_ar1_sources(spec, rng);
  const Observation obs = mix_observe(a, s, spec, rng);
  Whitening wh = prewhiten(obs.X, spec.n);
  BssProblem out;
  out.sets = estimate_statistics(wh.Z, spec.lags_M, spec.lags_N);
  out.A = a;
  out.WA = wh.W * a;
  out.W = std::move(wh.W);
  return out;
}

BssAugmented gen_bss_augmented(const BssSpec& spec, const ComplexMatrix& a, Rng& rng) {
  BssSpec c2 = spec;
  c2.innovation = Innovation::C2;
  c2.validate();
  const ComplexMatrix s = gen_ar1_sources(c2, rng);
  const Observation obs = mix_observe(a, s, c2, rng);
  const Whitening wh = prewhiten(obs.X, c2.n);
  std::vector<RealMatrix> ms;
  for (auto l : c2.lags_M)
    ms.push_back(augment_statistics(correlation(wh.Z, l), pseudo_correlation(wh.Z, l)));
  return {AugmentedSet::make(std::move(ms)), augment_mixing(wh.W * a)};
}

}  // namespace hjd
