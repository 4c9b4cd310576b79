// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "hjd/errors.hpp"
#include "hjd/matrix.hpp"
#include "hjd/metrics.hpp"

namespace hjd::detail {

inline std::optional<double> pi_of(const ComplexMatrix& v, const ComplexMatrix* mixing) {
  if (!mixing) return std::nullopt;
  try {
    return performance_index(adjoint(v) * *mixing);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::optional<double> pi_of(const RealMatrix& v, const RealMatrix* mixing) {
  if (!mixing) return std::nullopt;
  try {
    return performance_index(transpose(v) * *mixing);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace hjd::detail
