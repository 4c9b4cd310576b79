// SPDX-License-Identifier: Apache-2.0
//
// Unitary hybrid joint diagonalization: complex Givens sweeps (CO-HJD) and
// the real-Givens variant run after a Takagi-based pre-transform (RO-HJD).
#pragma once

#include <array>
#include <vector>

#include "hjd/linalg.hpp"
#include "hjd/sets.hpp"

namespace hjd {

using Row3 = std::array<cd, 3>;

/// Rows e1,k = [M_pp - M_qq, -(M_pq + M_qp), j(M_qp - M_pq)].
std::vector<Row3> build_e1(const std::vector<ComplexMatrix>& m, std::size_t p, std::size_t q);
/// Rows e2,k = scale·[2N_pq, N_pp - N_qq, j(N_pp + N_qq)].
std::vector<Row3> build_e2(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale = 1.0);

/// Re(Σ_k ±e_kᴴ e_k) accumulated into a symmetric 3x3.
void add_gram(RealSym3& q, const std::vector<Row3>& rows, double sign);

struct GivensStep {
  double c = 1.0;  // cos θ, >= 1/√2
  cd g{0.0};       // sin θ e^{jα}
  RotationParams params;
  Block2 block() const { return givens_block_cs(c, g); }
};

/// Closed-form CO-HJD rotation for the pair (p, q).
GivensStep co_hjd_rotation(const TargetSets& sets, std::size_t p, std::size_t q,
                           double e2_scale = 1.0);

/// Runs CO-HJD in place: sets become VᴴM_kV and VᴴN_kV*. When `mixing` is
/// given, PI(VᴴA) is recorded per sweep.
JdResult co_hjd(TargetSets& sets, const SweepConfig& config,
                const ComplexMatrix* mixing = nullptr);

/// B = U·E with U the left singular vectors of N1 and UᴴN1U* = E diag(r) Eᵀ.
/// Throws Error(rank_deficient) when N1 is numerically singular.
ComplexMatrix ro_transform(const ComplexMatrix& n1);

/// Real Givens rotation (α = 0) minimizing the criterion at (p, q).
GivensStep ro_rotation(const TargetSets& sets, std::size_t p, std::size_t q,
                       double e2_scale = 1.0);

/// RO-HJD: transform by B = ro_transform(N_1), then real Givens sweeps.
/// Requires K2 >= 1. V = B·V_real.
JdResult ro_hjd(TargetSets& sets, const SweepConfig& config,
                const ComplexMatrix* mixing = nullptr);

}  // namespace hjd
