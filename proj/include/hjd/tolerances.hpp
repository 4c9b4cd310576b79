// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hjd::tol {

// Eigenvalue ties in the small symmetric solvers (relative).
inline constexpr double eig_tie = 1e-12;

// Pencil eigenvalue accepted as real non-negative when
// |Im λ| <= pencil_imag·(1+|λ|) and Re λ >= -pencil_negative.
inline constexpr double pencil_imag = 1e-9;
inline constexpr double pencil_negative = 1e-12;
// Smallest admissible wᵀJw of a unit-norm pencil eigenvector.
inline constexpr double pencil_jnorm = 1e-12;

// Input symmetry checks (relative Frobenius).
inline constexpr double symmetry = 1e-8;
inline constexpr double augmented_symmetry = 1e-10;

// Rank tests: smallest / largest singular value.
inline constexpr double rank = 1e-10;
inline constexpr double whitening_rank = 1e-10;

// Jacobi sweeps in the dense kernels.
inline constexpr int kernel_max_sweeps = 100;

// H-CJDi shear magnitude cap and divergence guard on ‖V‖_F.
inline constexpr double max_shear = 5.0;
inline constexpr double divergence_norm = 1e8;

}  // namespace hjd::tol
