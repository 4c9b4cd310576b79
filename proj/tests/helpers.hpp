// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hjd/matrix.hpp"
#include "hjd/scenarios.hpp"

namespace hjd::test {

inline ComplexMatrix random_symmetric(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_gaussian(n, n, rng);
  return 0.5 * (x + transpose(x));
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_gaussian(n, n, rng);
  return 0.5 * (x + adjoint(x));
}

inline RealMatrix random_real(std::size_t r, std::size_t c, Rng& rng) {
  std::normal_distribution<double> nd;
  RealMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = nd(rng);
  return m;
}

inline RealMatrix random_real_symmetric(std::size_t n, Rng& rng) {
  const RealMatrix x = random_real(n, n, rng);
  return 0.5 * (x + transpose(x));
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

template <class T>
double rel_diff(const Matrix<T>& a, const Matrix<T>& b) {
  return frobenius_norm(a - b) / std::max(frobenius_norm(b), 1e-300);
}

}  // namespace hjd::test
