// SPDX-License-Identifier: Apache-2.0
#include "hjd/rotations.hpp"

#include <cmath>

namespace hjd {

Block2 operator*(const Block2& a, const Block2& b) {
  return {a.pp * b.pp + a.pq * b.qp, a.pp * b.pq + a.pq * b.qq,
          a.qp * b.pp + a.qq * b.qp, a.qp * b.pq + a.qq * b.qq};
}

Block2 givens_block_cs(double c, cd g) { return {c, -std::conj(g), g, c}; }

Block2 givens_block(double theta, double alpha) {
  return givens_block_cs(std::cos(theta), std::polar(std::sin(theta), alpha));
}

Block2 hyperbolic_block_cs(double ch, double sh, double phi) {
  return {ch, std::polar(sh, -phi), std::polar(sh, phi), ch};
}

Block2 hyperbolic_block(double y, double phi) {
  return hyperbolic_block_cs(std::cosh(y), std::sinh(y), phi);
}

Block2 combined_block(const RotationParams& r) {
  return givens_block(r.theta, r.alpha) * hyperbolic_block(r.y, r.phi);
}

namespace {

void right_multiply(ComplexMatrix& m, cd rpp, cd rpq, cd rqp, cd rqq, std::size_t p,
                    std::size_t q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const cd a = m(i, p), b = m(i, q);
    m(i, p) = a * rpp + b * rqp;
    m(i, q) = a * rpq + b * rqq;
  }
}

// Rows p and q of Rᴴ·M.
void left_multiply_adjoint(ComplexMatrix& m, const Block2& r, std::size_t p, std::size_t q) {
  const cd app = std::conj(r.pp), aqp = std::conj(r.qp);
  const cd apq = std::conj(r.pq), aqq = std::conj(r.qq);
  auto rp = m.row(p);
  auto rq = m.row(q);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const cd a = rp[j], b = rq[j];
    rp[j] = app * a + aqp * b;
    rq[j] = apq * a + aqq * b;
  }
}

}  // namespace

void apply_hermitian_congruence(ComplexMatrix& m, const Block2& r, std::size_t p, std::size_t q) {
  right_multiply(m, r.pp, r.pq, r.qp, r.qq, p, q);
  left_multiply_adjoint(m, r, p, q);
}

void apply_transpose_congruence(ComplexMatrix& n, const Block2& r, std::size_t p, std::size_t q) {
  right_multiply(n, std::conj(r.pp), std::conj(r.pq), std::conj(r.qp), std::conj(r.qq), p, q);
  left_multiply_adjoint(n, r, p, q);
}

void accumulate(ComplexMatrix& v, const Block2& r, std::size_t p, std::size_t q) {
  right_multiply(v, r.pp, r.pq, r.qp, r.qq, p, q);
}

ComplexMatrix embed(const Block2& r, std::size_t n, std::size_t p, std::size_t q) {
  ComplexMatrix g = ComplexMatrix::identity(n);
  g(p, p) = r.pp;
  g(p, q) = r.pq;
  g(q, p) = r.qp;
  g(q, q) = r.qq;
  return g;
}

void apply_real_congruence(RealMatrix& m, double c, double s, std::size_t p, std::size_t q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double a = m(i, p), b = m(i, q);
    m(i, p) = c * a + s * b;
    m(i, q) = -s * a + c * b;
  }
  auto rp = m.row(p);
  auto rq = m.row(q);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double a = rp[j], b = rq[j];
    rp[j] = c * a + s * b;
    rq[j] = -s * a + c * b;
  }
}

void accumulate_real(RealMatrix& v, double c, double s, std::size_t p, std::size_t q) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double a = v(i, p), b = v(i, q);
    v(i, p) = c * a + s * b;
    v(i, q) = -s * a + c * b;
  }
}

}  // namespace hjd
