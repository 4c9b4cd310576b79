// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hjd/matrix.hpp"
#include "hjd/rotations.hpp"

namespace hjd {

/// {M_k} diagonalized by Hermitian congruence, {N_k} by transpose congruence.
struct TargetSets {
  std::vector<ComplexMatrix> M;
  std::vector<ComplexMatrix> N;
  std::size_t n = 0;

  /// Validates shapes and finiteness, symmetrizes every N_k.
  static TargetSets make(std::vector<ComplexMatrix> m, std::vector<ComplexMatrix> n);
};

struct SweepConfig {
  double tau = 1e-8;
  int max_sweeps = 100;
  // Scale on the e2 rows of CO-HJD. 1.0 is the exact minimizer of the
  // criterion; 0.5 gives the variant with the halved e2.
  double co_e2_scale = 1.0;
  // Uniform scale on the H-CJDi e3..e6 rows.
  double hcjdi_e_scale = 0.5;
  double max_shear = 5.0;
  bool record_rotations = false;

  void validate() const;
};

struct SweepRecord {
  int sweep = 0;
  double cost = 0;
  double max_sin = 0;
  double max_sinh = 0;
  std::optional<double> pi;
};

struct Diagnostics {
  std::vector<SweepRecord> sweeps;  // sweeps[0] is the initial state
  bool converged = false;
  int median_mismatches = 0;
  int skipped_rotations = 0;
  std::vector<RotationParams> rotations;  // filled when record_rotations is set

  int sweeps_run() const noexcept { return sweeps.empty() ? 0 : sweeps.back().sweep; }
};

struct JdResult {
  ComplexMatrix V;
  Diagnostics diagnostics;
};

}  // namespace hjd
