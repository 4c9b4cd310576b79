// SPDX-License-Identifier: Apache-2.0
//
// Joint diagonalization of real 2n x 2n augmented statistics with paired
// real Givens rotations that keep the [[X, -Y], [Y, X]] structure.
#pragma once

#include <array>
#include <vector>

#include "hjd/linalg.hpp"
#include "hjd/sets.hpp"

namespace hjd {

/// [[Re A, -Im A], [Im A, Re A]]
RealMatrix augment_mixing(const ComplexMatrix& a);

/// Symmetric part of E[x̄(t+τ) x̄(t)ᵀ] from R = E[x(t+τ)x(t)ᴴ] and
/// P = E[x(t+τ)x(t)ᵀ].
RealMatrix augment_statistics(const ComplexMatrix& r, const ComplexMatrix& p);

struct AugmentedSet {
  std::vector<RealMatrix> M;
  std::size_t n = 0;  // base dimension; matrices are 2n x 2n

  /// Validates shape, finiteness and symmetry (1e-10 relative), then
  /// symmetrizes exactly.
  static AugmentedSet make(std::vector<RealMatrix> m);
};

struct FVectors {
  std::array<Vec2, 5> f;
};

/// f1..f5 for one matrix; f5 depends on p only.
FVectors build_f_vectors(const RealMatrix& m, std::size_t n, std::size_t p, std::size_t q);

struct RealGivens {
  double c = 1.0;
  double s = 0.0;
};

RealGivens aro_rotation_theta(const AugmentedSet& set, std::size_t p, std::size_t q);
RealGivens aro_rotation_theta_prime(const AugmentedSet& set, std::size_t p, std::size_t q);
RealGivens aro_rotation_theta_dprime(const AugmentedSet& set, std::size_t p);

enum class PairKind { theta, theta_prime, theta_dprime };

/// Applies the paired rotation as M̄ ← V̄ᵀM̄V̄ to every matrix and
/// accumulates V̄ ← V̄·G. For theta_dprime, q is ignored.
void apply_paired_rotation(AugmentedSet& set, RealMatrix& v, PairKind kind, std::size_t p,
                           std::size_t q, const RealGivens& g);

struct AroResult {
  RealMatrix V;
  Diagnostics diagnostics;
};

/// `mixing` is the augmented Ā; PI is measured on V̄ᵀĀ.
AroResult aro_hjd(AugmentedSet& set, const SweepConfig& config,
                  const RealMatrix* mixing = nullptr);

double aro_cost(const AugmentedSet& set);

}  // namespace hjd
