#include "jordanopt/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jordanopt {

QuatMat QuatMat::identity(int n) {
  QuatMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion::real(1.0);
  return m;
}

QuatMat QuatMat::operator+(const QuatMat& o) const {
  QuatMat r(n_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

QuatMat QuatMat::operator-(const QuatMat& o) const {
  QuatMat r(n_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

QuatMat QuatMat::operator*(double s) const {
  QuatMat r(n_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

QuatMat QuatMat::mul(const QuatMat& o) const {
  if (o.n_ != n_) throw std::invalid_argument("QuatMat::mul: size mismatch");
  QuatMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Quaternion& aik = (*this)(i, k);
      for (int j = 0; j < n_; ++j) r(i, j) = r(i, j) + aik * o(k, j);
    }
  return r;
}

QuatMat QuatMat::conj_transpose() const {
  QuatMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

double QuatMat::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i).w;
  return t;
}

double QuatMat::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Quaternion diff = (*this)(i, j) - (*this)(j, i).conj();
      d = std::max(d, std::sqrt(diff.norm_sq()));
    }
  return d;
}

double QuatMat::max_abs_diff(const QuatMat& o) const {
  double d = 0.0;
  for (size_t k = 0; k < a_.size(); ++k) {
    Quaternion diff = a_[k] - o.a_[k];
    d = std::max(d, std::sqrt(diff.norm_sq()));
  }
  return d;
}

Eigen::MatrixXcd QuatMat::complex_adjoint() const {
  const int n = n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = (*this)(i, j);
      const std::complex<double> alpha(q.w, q.x);
      const std::complex<double> beta(q.y, q.z);
      m(i, j) = alpha;
      m(i, j + n) = beta;
      m(i + n, j) = -std::conj(beta);
      m(i + n, j + n) = std::conj(alpha);
    }
  return m;
}

QuatMat QuatMat::from_complex_adjoint(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("from_complex_adjoint: need even square matrix");
  const int n = static_cast<int>(m.rows()) / 2;
  QuatMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::complex<double> alpha = m(i, j);
      const std::complex<double> beta = m(i, j + n);
      r(i, j) = Quaternion(alpha.real(), alpha.imag(), beta.real(), beta.imag());
    }
  return r;
}

}  // namespace jordanopt
