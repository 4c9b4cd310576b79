// SPDX-License-Identifier: Apache-2.0
#include "hjd/errors.hpp"

namespace hjd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::rank_deficient: return "rank-deficient";
    case ErrorKind::degenerate_pencil: return "degenerate-pencil";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::undefined_pi: return "undefined-pi";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

}  // namespace hjd
