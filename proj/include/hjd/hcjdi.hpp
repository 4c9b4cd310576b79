// SPDX-License-Identifier: Apache-2.0
//
// Non-unitary hybrid JD: each (p, q) step applies a real-axis combined
// Givens/hyperbolic transform R(θ, 0, y, 0) and then an imaginary-axis one
// R(θ', π/2, y', π/2), both solved in closed form through a 3x3 pencil.
#pragma once

#include <vector>

#include "hjd/errors.hpp"
#include "hjd/linalg.hpp"
#include "hjd/orthogonal.hpp"
#include "hjd/sets.hpp"

namespace hjd {

struct HermitianizedSets {
  std::vector<ComplexMatrix> Mt;  // 2K1 Hermitian matrices
  std::vector<ComplexMatrix> N;   // K2 symmetric matrices
  std::size_t n = 0;

  static HermitianizedSets from(const TargetSets& sets);
};

/// Mt[2k] = (M_k + M_kᴴ)/2, Mt[2k+1] = (M_k - M_kᴴ)/(2j).
std::vector<ComplexMatrix> hermitianize(const std::vector<ComplexMatrix>& m);
/// (N + Nᵀ)/2 for each matrix.
std::vector<ComplexMatrix> symmetrize(std::vector<ComplexMatrix> n);

std::vector<Row3> build_e3(const std::vector<ComplexMatrix>& mt, std::size_t p, std::size_t q,
                           double scale = 0.5);
std::vector<Row3> build_e4(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale = 0.5);
std::vector<Row3> build_e5(const std::vector<ComplexMatrix>& mt, std::size_t p, std::size_t q,
                           double scale = 0.5);
std::vector<Row3> build_e6(const std::vector<ComplexMatrix>& n, std::size_t p, std::size_t q,
                           double scale = 0.5);

struct HyperbolicStep {
  RotationParams params;
  double cos_theta = 1, sin_theta = 0;
  double cosh_y = 1, sinh_y = 0;
  Vec3 w{0, 0, 1};
  bool median_differs = false;
  Block2 block() const;
};

/// Rotation parameters from a pencil vector w (wᵀJw = 1, w[2] >= 0).
/// `phase` is 0 or π/2; |y| is clamped to max_shear.
HyperbolicStep step_from_w(const Vec3& w, double phase, double max_shear = 5.0);

/// Real-axis step. Throws Error(degenerate_pencil) when no admissible w exists.
HyperbolicStep solve_r0(const HermitianizedSets& sets, std::size_t p, std::size_t q,
                        const SweepConfig& config = {});
/// Imaginary-axis step.
HyperbolicStep solve_rpi2(const HermitianizedSets& sets, std::size_t p, std::size_t q,
                          const SweepConfig& config = {});

/// Thrown when ‖V‖_F exceeds the divergence guard; carries the trace so far.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, Diagnostics diagnostics)
      : Error(ErrorKind::divergence, what), diagnostics_(std::move(diagnostics)) {}
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

/// Runs H-CJDi on a copy of `sets`. Recorded cost is the criterion on the
/// original (non-Hermitianized) sets.
JdResult h_cjdi(const TargetSets& sets, const SweepConfig& config,
                const ComplexMatrix* mixing = nullptr);

/// Σ_k off(Mt[2k] + j·Mt[2k+1]) + Σ_k off(N_k)
double hcjdi_cost(const HermitianizedSets& sets);

}  // namespace hjd
