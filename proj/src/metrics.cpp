// SPDX-License-Identifier: Apache-2.0
#include "hjd/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "hjd/errors.hpp"

namespace hjd {

namespace {

template <class T>
double off_impl(const Matrix<T>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (i != j) s += std::norm(x(i, j));
  return s;
}

template <class T>
double pi_impl(const Matrix<T>& p) {
  if (!p.square() || p.rows() < 2)
    throw Error(ErrorKind::invalid_input, "performance_index: need a square matrix, n >= 2");
  const std::size_t n = p.rows();
  std::vector<double> row_max(n, 0.0), col_max(n, 0.0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const double a = std::norm(p(l, m));
      row_max[l] = std::max(row_max[l], a);
      col_max[m] = std::max(col_max[m], a);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!(row_max[i] > 0.0) || !(col_max[i] > 0.0))
      throw Error(ErrorKind::undefined_pi, "performance_index: zero row or column");

  double rows = 0.0, cols = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    double s = 0.0;
    for (std::size_t m = 0; m < n; ++m) s += std::norm(p(l, m)) / row_max[l];
    rows += s - 1.0;
  }
  for (std::size_t m = 0; m < n; ++m) {
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l) s += std::norm(p(l, m)) / col_max[m];
    cols += s - 1.0;
  }
  const double norm = 1.0 / (2.0 * static_cast<double>(n) * static_cast<double>(n - 1));
  return norm * rows + norm * cols;
}

}  // namespace

double off_energy(const ComplexMatrix& x) { return off_impl(x); }
double off_energy(const RealMatrix& x) { return off_impl(x); }

double jd_cost(const TargetSets& sets, const ComplexMatrix& v) {
  const ComplexMatrix vh = adjoint(v);
  const ComplexMatrix vc = conj(v);
  double s = 0.0;
  for (const auto& m : sets.M) s += off_energy(vh * m * v);
  for (const auto& n : sets.N) s += off_energy(vh * n * vc);
  return s;
}

double jd_cost(const TargetSets& sets) {
  double s = 0.0;
  for (const auto& m : sets.M) s += off_energy(m);
  for (const auto& n : sets.N) s += off_energy(n);
  return s;
}

double performance_index(const ComplexMatrix& p) { return pi_impl(p); }
double performance_index(const RealMatrix& p) { return pi_impl(p); }

double modulus_of_uniqueness(const DiagonalProfiles& profiles) {
  if (profiles.size() < 2) throw Error(ErrorKind::invalid_input, "MoU needs at least two profiles");
  const std::size_t len = profiles.front().size();
  std::vector<double> norms(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].size() != len)
      throw Error(ErrorKind::invalid_input, "MoU profiles have unequal lengths");
    double s = 0.0;
    for (const auto& x : profiles[i]) s += std::norm(x);
    norms[i] = std::sqrt(s);
    if (!(norms[i] > 0.0)) throw Error(ErrorKind::invalid_input, "MoU profile is zero");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      cd dot = 0.0;
      for (std::size_t k = 0; k < len; ++k) dot += std::conj(profiles[i][k]) * profiles[j][k];
      best = std::max(best, std::abs(dot) / (norms[i] * norms[j]));
    }
  return best;
}

double snr_db(const ComplexMatrix& signal, const ComplexMatrix& noise, SnrConvention convention) {
  const double ratio = frobenius_norm(signal) / frobenius_norm(noise);
  return (convention == SnrConvention::literal ? 10.0 : 20.0) * std::log10(ratio);
}

double snr_amplitude_ratio(double db, SnrConvention convention) {
  return std::pow(10.0, db / (convention == SnrConvention::literal ? 10.0 : 20.0));
}

}  // namespace hjd
