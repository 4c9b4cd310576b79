// SPDX-License-Identifier: Apache-2.0
//
// Small dense kernels used by the joint-diagonalization sweeps: closed-form
// and Jacobi eigen solvers for tiny real symmetric matrices, the (Q, J)
// pencil with J = diag(-1, 1, 1), Takagi factorization and a one-sided
// Jacobi SVD. All functions are pure.
#pragma once

#include <array>
#include <vector>

#include "hjd/matrix.hpp"

namespace hjd {

/// Real symmetric 2x2, upper triangle only.
struct RealSym2 {
  double a00 = 0, a01 = 0, a11 = 0;
  double operator()(int i, int j) const noexcept;
  double frobenius_norm() const noexcept;
};

/// Real symmetric 3x3, upper triangle only.
struct RealSym3 {
  double a00 = 0, a01 = 0, a02 = 0, a11 = 0, a12 = 0, a22 = 0;
  double operator()(int i, int j) const noexcept;
  void add(int i, int j, double v) noexcept;  // i <= j
  RealMatrix dense() const;
  double frobenius_norm() const noexcept;
};

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Eigen decomposition from cyclic Jacobi. Values are in the solver's
/// internal (unsorted) order; column k of `vectors` pairs with values[k].
struct SymmetricEigen {
  std::vector<double> values;
  RealMatrix vectors;
};

SymmetricEigen symmetric_eigen(RealMatrix a);

/// Unit eigenvector of the largest eigenvalue, first nonzero component >= 0.
/// Ties (1e-12 relative) resolve to the lowest internal index.
Vec3 sym3_principal_eigvec(const RealSym3& q);
Vec2 sym2_principal_eigvec(const RealSym2& q);

struct PencilEigvec {
  Vec3 w{0, 0, 1};  // wᵀJw = 1, w[2] >= 0
  double lambda = 0;
  bool median_differs = false;  // selected eigenvalue is not the median one
};

/// Solves J·Q·w = λ·w and returns the J-positive eigenvector of the
/// smallest real non-negative λ, normalized to wᵀJw = 1.
/// Throws Error(degenerate_pencil) when no admissible eigenvector exists.
PencilEigvec jpencil_selected_eigvec(const RealSym3& q);

struct Takagi {
  ComplexMatrix E;            // unitary
  std::vector<double> sigma;  // descending, >= 0
};

/// T = E·diag(σ)·Eᵀ for complex symmetric T.
Takagi takagi(const ComplexMatrix& t);

struct Svd {
  ComplexMatrix U;            // rows x cols, orthonormal columns
  std::vector<double> sigma;  // descending
  ComplexMatrix V;            // cols x cols, unitary
};

/// X = U·diag(σ)·Vᴴ by one-sided (Hestenes) Jacobi; requires rows >= cols.
Svd svd(const ComplexMatrix& x);

ComplexMatrix left_singular_vectors(const ComplexMatrix& x);

/// Orthonormalizes the columns of `a` (modified Gram-Schmidt, two passes).
ComplexMatrix orthonormal_columns(ComplexMatrix a);

}  // namespace hjd
