// SPDX-License-Identifier: Apache-2.0
//
// Synthetic target-set generation and the non-circular source separation
// simulation (AR(1) sources, mixing, noise, lagged statistics, whitening).
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hjd/aro.hpp"
#include "hjd/matrix.hpp"
#include "hjd/metrics.hpp"
#include "hjd/sets.hpp"

namespace hjd {

using Rng = std::mt19937_64;

/// i.i.d. CN(0, 1) entries (real and imaginary parts N(0, 1/2)).
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
cd random_cn(Rng& rng);
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// With a condition target, A = U diag(σ) Wᴴ with σ log-spaced from 1 to
/// 1/cond; otherwise i.i.d. CN(0, 1).
ComplexMatrix random_mixing(std::size_t n, std::optional<double> cond_target, Rng& rng);

struct ScenarioSpec {
  std::size_t n = 5;
  std::size_t K1 = 5;
  std::size_t K2 = 5;
  std::optional<double> cond_target;
  std::optional<double> snr_db;      // none: exact
  std::optional<double> mou_target;  // none: i.i.d. diagonals
  SnrConvention snr_convention = SnrConvention::literal;

  void validate() const;
};

struct GroundTruth {
  ComplexMatrix A;
  std::vector<std::vector<cd>> D;  // K1 diagonals
  std::vector<std::vector<cd>> L;  // K2 diagonals
  double mou = 0;
  double epsilon = 0;  // MoU bisection result (0 if unused)
  int bisection_iterations = 0;
};

struct Problem {
  TargetSets sets;
  GroundTruth truth;
};

Problem gen_problem(const ScenarioSpec& spec, Rng& rng);

DiagonalProfiles diagonal_profiles(const GroundTruth& truth);

/// Augmented real set M̄_k = Ā D̄_k Āᵀ (+ symmetric noise at the spec SNR)
/// with K1 + K2 real diagonals D̄_k of length 2n.
struct AugmentedProblem {
  AugmentedSet set;
  RealMatrix mixing;  // Ā
};
AugmentedProblem gen_augmented_problem(const ScenarioSpec& spec, const ComplexMatrix& a, Rng& rng);

// ---- source separation ----

enum class Innovation { C1, C2 };
enum class NoiseKind { white, colored };

struct BssSpec {
  std::size_t m = 5;
  std::size_t n = 3;
  std::size_t T = 1000;
  std::vector<cd> ar_coeffs;  // empty: defaults for n <= 3, cycled beyond
  double rho = 0.9;
  Innovation innovation = Innovation::C1;
  NoiseKind noise = NoiseKind::white;
  double coupling = 0.8;
  std::optional<double> snr_db = 20.0;  // none: noiseless
  SnrConvention snr_convention = SnrConvention::literal;
  std::vector<std::size_t> lags_M{1, 2, 3, 4, 5};
  std::vector<std::size_t> lags_N{1, 2, 3, 4, 5};
  std::size_t burn_in = 1000;

  void validate() const;
  std::vector<cd> coefficients() const;
};

/// n x T sources, unit empirical power per row.
ComplexMatrix gen_ar1_sources(const BssSpec& spec, Rng& rng);

/// m x m spatial noise covariance (identity or Toeplitz coupling^|i-j|).
RealMatrix noise_covariance(const BssSpec& spec);

struct Observation {
  ComplexMatrix X;
  ComplexMatrix noise;
};
Observation mix_observe(const ComplexMatrix& a, const ComplexMatrix& s, const BssSpec& spec,
                        Rng& rng);

/// (1/(T-τ)) Σ_t x(t+τ) x(t)ᴴ
ComplexMatrix correlation(const ComplexMatrix& x, std::size_t lag);
/// (1/(T-τ)) Σ_t x(t+τ) x(t)ᵀ
ComplexMatrix pseudo_correlation(const ComplexMatrix& x, std::size_t lag);

TargetSets estimate_statistics(const ComplexMatrix& x, const std::vector<std::size_t>& lags_M,
                               const std::vector<std::size_t>& lags_N);

struct Whitening {
  ComplexMatrix W;  // n x m
  ComplexMatrix Z;  // n x T
};
/// W = Λ_s^{-1/2} U_sᴴ from the n dominant eigenpairs of the lag-0 covariance.
Whitening prewhiten(const ComplexMatrix& x, std::size_t n_sources);
/// Whitening matrix from a given Hermitian covariance.
ComplexMatrix whitening_matrix(const ComplexMatrix& covariance, std::size_t n_sources);

struct BssProblem {
  TargetSets sets;
  ComplexMatrix A;  // m x n
  ComplexMatrix W;  // n x m
  ComplexMatrix WA;
};
BssProblem gen_bss_problem(const BssSpec& spec, const ComplexMatrix& a, Rng& rng);

/// Augmented statistics of a whitened realization (one M̄ per lag in lags_M).
struct BssAugmented {
  AugmentedSet set;
  RealMatrix mixing;  // augment(WA)
};
BssAugmented gen_bss_augmented(const BssSpec& spec, const ComplexMatrix& a, Rng& rng);

/// splitmix64 finalizer of (seed, index); stable across platforms.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hjd
