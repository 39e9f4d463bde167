#pragma once

#include <vector>

#include <Eigen/Dense>

namespace jordanopt {

// Quaternion with explicit real components w + x*i + y*j + z*k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion real(double r) { return Quaternion(r, 0.0, 0.0, 0.0); }

  Quaternion conj() const { return Quaternion(w, -x, -y, -z); }
  double norm_sq() const { return w * w + x * x + y * y + z * z; }

  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  // Hamilton product; i*j = k, j*k = i, k*i = j.
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

// Square quaternionic matrix, row-major dense storage.
//
// Hermitian elements satisfy a(i,j) = a(j,i).conj(); the real trace of a
// Hermitian element is the sum of the (real) diagonal entries. The complex
// adjoint embedding maps Q = A + B*j to the 2n x 2n complex matrix
// [[A, B], [-conj(B), conj(A)]]; it is a *-homomorphism, so spectra of
// Hermitian elements can be read off the embedding (each quaternionic
// eigenvalue appears twice).
class QuatMat {
 public:
  QuatMat() = default;
  explicit QuatMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static QuatMat identity(int n);
  static QuatMat zero(int n) { return QuatMat(n); }

  int size() const { return n_; }
  Quaternion& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Quaternion& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  QuatMat operator+(const QuatMat& o) const;
  QuatMat operator-(const QuatMat& o) const;
  QuatMat operator*(double s) const;
  QuatMat mul(const QuatMat& o) const;
  QuatMat conj_transpose() const;

  double trace_real() const;
  double hermiticity_defect() const;  // max |a(i,j) - a(j,i).conj()| componentwise
  double max_abs_diff(const QuatMat& o) const;

  // Complex adjoint embedding and its inverse. from_complex_adjoint requires
  // the [[A, B], [-conj(B), conj(A)]] block structure and reads A and B.
  Eigen::MatrixXcd complex_adjoint() const;
  static QuatMat from_complex_adjoint(const Eigen::MatrixXcd& m);

 private:
  int n_ = 0;
  std::vector<Quaternion> a_;
};

}  // namespace jordanopt
