// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hjd/matrix.hpp"
#include "hjd/sets.hpp"

namespace hjd {

/// Σ_{i≠j} |X_ij|²
double off_energy(const ComplexMatrix& x);
double off_energy(const RealMatrix& x);

/// Σ_k off(VᴴM_kV) + Σ_k off(VᴴN_kV*)
double jd_cost(const TargetSets& sets, const ComplexMatrix& v);
/// jd_cost at V = I.
double jd_cost(const TargetSets& sets);

/// Normalized index of how far P is from a scaled permutation; 0 means
/// perfect separation. Throws Error(undefined_pi) on a zero row or column.
double performance_index(const ComplexMatrix& p);
double performance_index(const RealMatrix& p);

/// profiles[i] = [D_{1,ii}, ..., D_{K1,ii}, L_{1,ii}, ..., L_{K2,ii}]
using DiagonalProfiles = std::vector<std::vector<cd>>;

double modulus_of_uniqueness(const DiagonalProfiles& profiles);

enum class SnrConvention {
  literal,       // 10 log10(‖S‖_F / ‖W‖_F)
  conventional,  // 20 log10(‖S‖_F / ‖W‖_F)
};

double snr_db(const ComplexMatrix& signal, const ComplexMatrix& noise,
              SnrConvention convention = SnrConvention::literal);

/// Amplitude ratio ‖S‖/‖W‖ that realizes `db` under `convention`.
double snr_amplitude_ratio(double db, SnrConvention convention);

}  // namespace hjd
