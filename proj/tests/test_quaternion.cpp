#include "doctest.h"

#include <cmath>

#include "jordanopt/quaternion.hpp"

using namespace jordanopt;

TEST_CASE("Hamilton product obeys the defining relations") {
  const Quaternion one(1, 0, 0, 0);
  const Quaternion i(0, 1, 0, 0);
  const Quaternion j(0, 0, 1, 0);
  const Quaternion k(0, 0, 0, 1);

  auto same = [](const Quaternion& a, const Quaternion& b) {
    return std::abs(a.w - b.w) == 0.0 && std::abs(a.x - b.x) == 0.0 &&
           std::abs(a.y - b.y) == 0.0 && std::abs(a.z - b.z) == 0.0;
  };

  CHECK(same(i * i, -one));
  CHECK(same(j * j, -one));
  CHECK(same(k * k, -one));
  CHECK(same(i * j, k));
  CHECK(same(j * k, i));
  CHECK(same(k * i, j));
  CHECK(same(j * i, -k));
  CHECK(same(i * j * k, -one));
}

TEST_CASE("conjugation and norm") {
  const Quaternion q(1.0, -2.0, 3.0, 0.5);
  const Quaternion p = q * q.conj();
  CHECK(p.w == doctest::Approx(q.norm_sq()).epsilon(1e-15));
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(0.0));
  CHECK(p.z == doctest::Approx(0.0));
  CHECK(q.norm_sq() == doctest::Approx(1.0 + 4.0 + 9.0 + 0.25));
}

TEST_CASE("complex adjoint embedding is a homomorphism") {
  QuatMat a(2);
  a(0, 0) = Quaternion::real(1.0);
  a(0, 1) = Quaternion(0.5, 0.25, -0.75, 0.1);
  a(1, 0) = a(0, 1).conj();
  a(1, 1) = Quaternion::real(-2.0);

  QuatMat b(2);
  b(0, 0) = Quaternion::real(0.3);
  b(0, 1) = Quaternion(-0.2, 1.0, 0.0, 0.4);
  b(1, 0) = b(0, 1).conj();
  b(1, 1) = Quaternion::real(0.8);

  const Eigen::MatrixXcd prod_embedded = a.mul(b).complex_adjoint();
  const Eigen::MatrixXcd embedded_prod = a.complex_adjoint() * b.complex_adjoint();
  CHECK((prod_embedded - embedded_prod).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("complex adjoint round trip") {
  QuatMat a(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a(i, j) = Quaternion(0.1 * (i + 1), 0.2 * j, i - j * 0.5, 0.05 * (i * 3 + j));

  const QuatMat back = QuatMat::from_complex_adjoint(a.complex_adjoint());
  CHECK(back.max_abs_diff(a) < 1e-15);
}

TEST_CASE("hermiticity defect and real trace") {
  QuatMat h(2);
  h(0, 0) = Quaternion::real(2.0);
  h(1, 1) = Quaternion::real(-0.5);
  h(0, 1) = Quaternion(1.0, 2.0, 3.0, 4.0);
  h(1, 0) = h(0, 1).conj();
  CHECK(h.hermiticity_defect() == doctest::Approx(0.0));
  CHECK(h.trace_real() == doctest::Approx(1.5));

  // breaking the conjugate symmetry shows up in the defect
  h(1, 0) = h(0, 1);
  CHECK(h.hermiticity_defect() > 1.0);
}

TEST_CASE("adjoint of a Hermitian element is complex Hermitian with doubled spectrum") {
  QuatMat h(2);
  h(0, 0) = Quaternion::real(1.0);
  h(1, 1) = Quaternion::real(3.0);
  h(0, 1) = Quaternion(0.0, 1.0, 0.0, 0.0);  // pure i off-diagonal
  h(1, 0) = h(0, 1).conj();

  const Eigen::MatrixXcd m = h.complex_adjoint();
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const Eigen::VectorXd ev = es.eigenvalues();
  // eigenvalues of [[1, q],[q*, 3]] with |q| = 1 are 2 -+ sqrt(2), each twice
  const double lo = 2.0 - std::sqrt(2.0);
  const double hi = 2.0 + std::sqrt(2.0);
  CHECK(ev(0) == doctest::Approx(lo).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(lo).epsilon(1e-12));
  CHECK(ev(2) == doctest::Approx(hi).epsilon(1e-12));
  CHECK(ev(3) == doctest::Approx(hi).epsilon(1e-12));

  // real trace is half the embedded trace
  CHECK(h.trace_real() == doctest::Approx(0.5 * m.trace().real()));
}

TEST_CASE("identity and zero") {
  const QuatMat id = QuatMat::identity(3);
  const QuatMat z = QuatMat::zero(3);
  CHECK(id.trace_real() == doctest::Approx(3.0));
  CHECK(z.trace_real() == doctest::Approx(0.0));
  CHECK(id.mul(id).max_abs_diff(id) == doctest::Approx(0.0));
  CHECK((id + z).max_abs_diff(id) == doctest::Approx(0.0));
}
