// SPDX-License-Identifier: Apache-2.0
#include "hjd/sets.hpp"

#include <string>

#include "hjd/errors.hpp"

namespace hjd {

TargetSets TargetSets::make(std::vector<ComplexMatrix> m, std::vector<ComplexMatrix> n) {
  if (m.empty() && n.empty()) throw Error(ErrorKind::invalid_input, "target sets are empty");
  const std::size_t dim = m.empty() ? n.front().rows() : m.front().rows();
  if (dim < 2) throw Error(ErrorKind::invalid_input, "dimension must be at least 2");
  auto check = [dim](const ComplexMatrix& x, const char* name, std::size_t k) {
    if (x.rows() != dim || x.cols() != dim)
      throw Error(ErrorKind::invalid_input,
                  std::string(name) + "[" + std::to_string(k) + "] has wrong shape");
    if (!all_finite(x))
      throw Error(ErrorKind::invalid_input,
                  std::string(name) + "[" + std::to_string(k) + "] is not finite");
  };
  for (std::size_t k = 0; k < m.size(); ++k) check(m[k], "M", k);
  for (std::size_t k = 0; k < n.size(); ++k) {
    check(n[k], "N", k);
    n[k] = symmetric_part(n[k]);
  }
  TargetSets s;
  s.M = std::move(m);
  s.N = std::move(n);
  s.n = dim;
  return s;
}

void SweepConfig::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorKind::config, "sweep.tau must be in (0, 1)");
  if (max_sweeps < 1) throw Error(ErrorKind::config, "sweep.max_sweeps must be >= 1");
  if (!(co_e2_scale > 0.0)) throw Error(ErrorKind::config, "sweep.co_e2_scale must be > 0");
  if (!(hcjdi_e_scale > 0.0)) throw Error(ErrorKind::config, "sweep.hcjdi_e_scale must be > 0");
  if (!(max_shear > 0.0)) throw Error(ErrorKind::config, "sweep.max_shear must be > 0");
}

}  // namespace hjd
