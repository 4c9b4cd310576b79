// SPDX-License-Identifier: Apache-2.0
//
// Elementary 2x2 transforms acting on a coordinate pair (p, q) and the
// in-place congruence updates that touch only rows/columns p and q.
#pragma once

#include <cstddef>

#include "hjd/matrix.hpp"

namespace hjd {

struct RotationParams {
  std::size_t p = 0, q = 1;
  double theta = 0, alpha = 0;  // Givens angle and phase
  double y = 0, phi = 0;        // hyperbolic shear and phase
};

/// Entries of the 2x2 block embedded at (p, q).
struct Block2 {
  cd pp{1.0}, pq{0.0}, qp{0.0}, qq{1.0};
};

Block2 operator*(const Block2& a, const Block2& b);

/// [[cos θ, -sin θ e^{-jα}], [sin θ e^{jα}, cos θ]]
Block2 givens_block(double theta, double alpha);
/// Same block from cos θ and g = sin θ e^{jα} directly.
Block2 givens_block_cs(double c, cd g);
/// [[cosh y, sinh y e^{-jφ}], [sinh y e^{jφ}, cosh y]]
Block2 hyperbolic_block(double y, double phi);
Block2 hyperbolic_block_cs(double ch, double sh, double phi);
/// G(θ, α)·H(y, φ)
Block2 combined_block(const RotationParams& r);

/// M ← RᴴMR
void apply_hermitian_congruence(ComplexMatrix& m, const Block2& r, std::size_t p, std::size_t q);
/// N ← RᴴNR*
void apply_transpose_congruence(ComplexMatrix& n, const Block2& r, std::size_t p, std::size_t q);
/// V ← V·R
void accumulate(ComplexMatrix& v, const Block2& r, std::size_t p, std::size_t q);

/// Dense n x n matrix equal to the identity except for the block at (p, q).
ComplexMatrix embed(const Block2& r, std::size_t n, std::size_t p, std::size_t q);

// Real Givens G with G_pp = G_qq = c, G_pq = -s, G_qp = s.

/// M ← GᵀMG
void apply_real_congruence(RealMatrix& m, double c, double s, std::size_t p, std::size_t q);
/// V ← V·G
void accumulate_real(RealMatrix& v, double c, double s, std::size_t p, std::size_t q);

}  // namespace hjd
