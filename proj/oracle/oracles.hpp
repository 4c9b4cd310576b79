// SPDX-License-Identifier: Apache-2.0
//
// Brute-force and third-party reference computations used to check the
// closed-form kernels. Nothing here reuses the solver code paths: rotations
// are built from their defining formulas and applied by dense products,
// eigenproblems go through Eigen.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hjd/matrix.hpp"
#include "hjd/metrics.hpp"
#include "hjd/sets.hpp"

namespace hjd::oracle {

// ---- dense references ----

ComplexMatrix dense_givens(std::size_t n, std::size_t p, std::size_t q, double theta, double alpha);
ComplexMatrix dense_hyperbolic(std::size_t n, std::size_t p, std::size_t q, double y, double phi);

/// Σ_k off(VᴴM_kV) + Σ_k off(VᴴN_kV*) with Eigen products.
double jd_cost(const TargetSets& sets, const ComplexMatrix& v);

/// Largest-eigenvalue eigenvector by shifted power iteration.
std::vector<double> power_iteration(const RealMatrix& q, int iterations = 10000);

std::vector<double> symmetric_eigenvalues(const RealMatrix& a);    // ascending
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);  // ascending
std::vector<double> singular_values(const ComplexMatrix& a);        // descending

/// Max pairwise normalized |d_iᴴd_j| from the Gram matrix.
double mou_gram(const DiagonalProfiles& profiles);

// ---- grid searches on 2x2 instances (p = 0, q = 1) ----

struct GridResult {
  double value = 0;
  double a = 0, b = 0;  // arg-min coordinates
};

/// Eq. (3) cost after the Givens rotation (θ, α).
double co_criterion(const TargetSets& sets, double theta, double alpha);
/// θ ∈ [-π/4, π/4] (inclusive linspace), α ∈ [0, 2π).
GridResult co_grid(const TargetSets& sets, int n_theta = 2000, int n_alpha = 2000);
/// Real rotation only (α = 0), 1-D grid.
GridResult ro_grid(const TargetSets& sets, int n_theta = 20001);

/// Σ_k |[RᴴM̃_kR]_pq|² + Σ_k |[RᴴN_kR*]_pq|², R = G(θ,φ)·H(y,φ).
double hcjdi_criterion(const std::vector<ComplexMatrix>& mt, const std::vector<ComplexMatrix>& n,
                       double theta, double y, double phase);
/// θ ∈ [-π/4, π/4], y ∈ [-2, 2].
GridResult hcjdi_grid(const std::vector<ComplexMatrix>& mt, const std::vector<ComplexMatrix>& n,
                      double phase, int n_theta = 2000, int n_y = 2000);

/// Off-energy of the augmented set after a paired rotation by θ.
double aro_criterion(const std::vector<RealMatrix>& m, int kind, std::size_t p, std::size_t q,
                     double theta);
GridResult aro_grid(const std::vector<RealMatrix>& m, int kind, std::size_t p, std::size_t q,
                    int n_theta = 20001);

// ---- standalone CJDi (Hermitian sets only) ----

struct CjdiStep {
  std::size_t p = 0, q = 1;
  double theta = 0, y = 0, phase = 0;
};

/// Runs `sweeps` sweeps of CJDi on Hermitian matrices. The 3x3 quadratic
/// of each step is fitted from measured entries after trial rotations, the
/// pencil goes through Eigen's generalized solver, and every rotation is
/// applied by a dense product.
std::vector<CjdiStep> cjdi_reference(std::vector<ComplexMatrix> m, int sweeps);

// ---- acceptance-style checks shared with the CLI ----

struct CheckResult {
  bool pass = false;
  std::string detail;
};

CheckResult check_co_grid(std::uint64_t seed, int instances);
CheckResult check_hcjdi_grid(std::uint64_t seed, int instances);
CheckResult check_lemma1(std::uint64_t seed, int instances);
CheckResult check_cjdi_reduction(std::uint64_t seed, int instances);
CheckResult check_jacobi_reduction(std::uint64_t seed, int instances);
CheckResult check_metrics(std::uint64_t seed, int instances);

std::vector<std::string> check_names();
CheckResult run_check(const std::string& name, std::uint64_t seed, int instances);

}  // namespace hjd::oracle
