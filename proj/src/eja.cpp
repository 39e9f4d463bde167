#include "jordanopt/eja.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jordanopt {

namespace {

void require_arithmetic(const EjaKind& k, const char* op) {
  if (!k.has_arithmetic())
    throw std::invalid_argument(std::string(op) + ": OctHerm3 carries no arithmetic");
}

void require_same_kind(const EjaElement& a, const EjaElement& b, const char* op) {
  if (a.kind() != b.kind())
    throw std::invalid_argument(std::string(op) + ": kind mismatch");
}

}  // namespace

// =============================================================================
// EjaKind
// =============================================================================

int EjaKind::rank() const {
  switch (family) {
    case EjaFamily::RealSym:
    case EjaFamily::ComplexHerm:
    case EjaFamily::QuatHerm:
      return n;
    case EjaFamily::Spin:
      return 2;
    case EjaFamily::OctHerm3:
      return 3;
  }
  return 0;
}

long long EjaKind::dim() const {
  const long long m = n;
  switch (family) {
    case EjaFamily::RealSym:
      return m * (m + 1) / 2;
    case EjaFamily::ComplexHerm:
      return m * m;
    case EjaFamily::QuatHerm:
      return m * (2 * m - 1);
    case EjaFamily::Spin:
      return m;
    case EjaFamily::OctHerm3:
      return 27;
  }
  return 0;
}

// =============================================================================
// EjaElement storage
// =============================================================================

// Matrix storage must be self-adjoint over its base ring; the eigensolver
// paths read only one triangle, so a skew part would be dropped silently.
constexpr double kSymmetryTol = 1e-9;

EjaElement::EjaElement(EjaKind kind, Eigen::MatrixXd m) : kind_(kind), data_(std::move(m)) {
  if (kind.family != EjaFamily::RealSym)
    throw std::invalid_argument("EjaElement: real matrix storage is for RealSym");
  if (real_mat().rows() != kind.n || real_mat().cols() != kind.n)
    throw std::invalid_argument("EjaElement: matrix size does not match kind");
  if ((real_mat() - real_mat().transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
    throw std::invalid_argument("EjaElement: RealSym element must be symmetric");
}

EjaElement::EjaElement(EjaKind kind, Eigen::MatrixXcd m) : kind_(kind), data_(std::move(m)) {
  if (kind.family != EjaFamily::ComplexHerm)
    throw std::invalid_argument("EjaElement: complex matrix storage is for ComplexHerm");
  if (cplx_mat().rows() != kind.n || cplx_mat().cols() != kind.n)
    throw std::invalid_argument("EjaElement: matrix size does not match kind");
  if ((cplx_mat() - cplx_mat().adjoint()).cwiseAbs().maxCoeff() > kSymmetryTol)
    throw std::invalid_argument("EjaElement: ComplexHerm element must be Hermitian");
}

EjaElement::EjaElement(EjaKind kind, QuatMat m) : kind_(kind), data_(std::move(m)) {
  if (kind.family != EjaFamily::QuatHerm)
    throw std::invalid_argument("EjaElement: quaternion matrix storage is for QuatHerm");
  if (quat_mat().size() != kind.n)
    throw std::invalid_argument("EjaElement: matrix size does not match kind");
  if (quat_mat().hermiticity_defect() > kSymmetryTol)
    throw std::invalid_argument("EjaElement: QuatHerm element must be Hermitian");
}

EjaElement::EjaElement(EjaKind kind, Eigen::VectorXd v) : kind_(kind), data_(std::move(v)) {
  if (kind.family != EjaFamily::Spin)
    throw std::invalid_argument("EjaElement: vector storage is for Spin");
  if (spin_vec().size() != kind.n)
    throw std::invalid_argument("EjaElement: spin vector length does not match kind");
}

const Eigen::MatrixXd& EjaElement::real_mat() const { return std::get<Eigen::MatrixXd>(data_); }
const Eigen::MatrixXcd& EjaElement::cplx_mat() const { return std::get<Eigen::MatrixXcd>(data_); }
const QuatMat& EjaElement::quat_mat() const { return std::get<QuatMat>(data_); }
const Eigen::VectorXd& EjaElement::spin_vec() const { return std::get<Eigen::VectorXd>(data_); }

EjaElement EjaElement::zero(EjaKind kind) {
  require_arithmetic(kind, "EjaElement::zero");
  switch (kind.family) {
    case EjaFamily::RealSym:
      return EjaElement(kind, Eigen::MatrixXd(Eigen::MatrixXd::Zero(kind.n, kind.n)));
    case EjaFamily::ComplexHerm:
      return EjaElement(kind, Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(kind.n, kind.n)));
    case EjaFamily::QuatHerm:
      return EjaElement(kind, QuatMat::zero(kind.n));
    default:
      return EjaElement(kind, Eigen::VectorXd(Eigen::VectorXd::Zero(kind.n)));
  }
}

EjaElement EjaElement::identity(EjaKind kind) {
  require_arithmetic(kind, "EjaElement::identity");
  switch (kind.family) {
    case EjaFamily::RealSym:
      return EjaElement(kind, Eigen::MatrixXd(Eigen::MatrixXd::Identity(kind.n, kind.n)));
    case EjaFamily::ComplexHerm:
      return EjaElement(kind, Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(kind.n, kind.n)));
    case EjaFamily::QuatHerm:
      return EjaElement(kind, QuatMat::identity(kind.n));
    default: {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(kind.n);
      v(0) = 1.0;  // spin identity (1, 0)
      return EjaElement(kind, v);
    }
  }
}

EjaElement EjaElement::operator+(const EjaElement& o) const {
  require_same_kind(*this, o, "EjaElement::operator+");
  switch (kind_.family) {
    case EjaFamily::RealSym:
      return EjaElement(kind_, Eigen::MatrixXd(real_mat() + o.real_mat()));
    case EjaFamily::ComplexHerm:
      return EjaElement(kind_, Eigen::MatrixXcd(cplx_mat() + o.cplx_mat()));
    case EjaFamily::QuatHerm:
      return EjaElement(kind_, quat_mat() + o.quat_mat());
    default:
      return EjaElement(kind_, Eigen::VectorXd(spin_vec() + o.spin_vec()));
  }
}

EjaElement EjaElement::operator-(const EjaElement& o) const {
  return *this + (o * -1.0);
}

EjaElement EjaElement::operator*(double s) const {
  switch (kind_.family) {
    case EjaFamily::RealSym:
      return EjaElement(kind_, Eigen::MatrixXd(real_mat() * s));
    case EjaFamily::ComplexHerm:
      return EjaElement(kind_, Eigen::MatrixXcd(cplx_mat() * s));
    case EjaFamily::QuatHerm:
      return EjaElement(kind_, quat_mat() * s);
    default:
      return EjaElement(kind_, Eigen::VectorXd(spin_vec() * s));
  }
}

double EjaElement::norm() const { return std::sqrt(std::max(0.0, inner_product(*this, *this))); }

double EjaElement::max_abs_diff(const EjaElement& o) const {
  require_same_kind(*this, o, "EjaElement::max_abs_diff");
  switch (kind_.family) {
    case EjaFamily::RealSym:
      return (real_mat() - o.real_mat()).cwiseAbs().maxCoeff();
    case EjaFamily::ComplexHerm:
      return (cplx_mat() - o.cplx_mat()).cwiseAbs().maxCoeff();
    case EjaFamily::QuatHerm:
      return quat_mat().max_abs_diff(o.quat_mat());
    default:
      return (spin_vec() - o.spin_vec()).cwiseAbs().maxCoeff();
  }
}

// Coordinate enumeration. RealSym and QuatHerm walk the upper triangle
// row-major, diagonal entries first within each row; ComplexHerm walks the
// full (s,t) grid row-major with real parts at s<t and imaginary parts at
// s>t. Off-diagonal coordinates carry the sqrt(2) normalization that makes
// the implied basis orthonormal in the algebra inner product (up to the
// spin-factor factor 2, where literal components are used instead).
Eigen::VectorXd EjaElement::to_coords() const {
  const double rt2 = std::sqrt(2.0);
  Eigen::VectorXd c(kind_.dim());
  switch (kind_.family) {
    case EjaFamily::RealSym: {
      const auto& m = real_mat();
      int idx = 0;
      for (int s = 0; s < kind_.n; ++s)
        for (int t = s; t < kind_.n; ++t) c(idx++) = (s == t) ? m(s, s) : rt2 * m(s, t);
      break;
    }
    case EjaFamily::ComplexHerm: {
      const auto& m = cplx_mat();
      int idx = 0;
      for (int s = 0; s < kind_.n; ++s)
        for (int t = 0; t < kind_.n; ++t) {
          if (s == t)
            c(idx++) = m(s, s).real();
          else if (s < t)
            c(idx++) = rt2 * m(s, t).real();
          else
            c(idx++) = rt2 * m(s, t).imag();
        }
      break;
    }
    case EjaFamily::QuatHerm: {
      const auto& m = quat_mat();
      int idx = 0;
      for (int s = 0; s < kind_.n; ++s)
        for (int t = s; t < kind_.n; ++t) {
          if (s == t) {
            c(idx++) = m(s, s).w;
          } else {
            const Quaternion& q = m(s, t);
            c(idx++) = rt2 * q.w;
            c(idx++) = rt2 * q.x;
            c(idx++) = rt2 * q.y;
            c(idx++) = rt2 * q.z;
          }
        }
      break;
    }
    default:
      c = spin_vec();
  }
  return c;
}

EjaElement EjaElement::from_coords(EjaKind kind, const Eigen::VectorXd& coords) {
  require_arithmetic(kind, "EjaElement::from_coords");
  if (coords.size() != kind.dim())
    throw std::invalid_argument("EjaElement::from_coords: coordinate length mismatch");
  const double irt2 = 1.0 / std::sqrt(2.0);
  switch (kind.family) {
    case EjaFamily::RealSym: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(kind.n, kind.n);
      int idx = 0;
      for (int s = 0; s < kind.n; ++s)
        for (int t = s; t < kind.n; ++t) {
          if (s == t)
            m(s, s) = coords(idx++);
          else
            m(s, t) = m(t, s) = irt2 * coords(idx++);
        }
      return EjaElement(kind, m);
    }
    case EjaFamily::ComplexHerm: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(kind.n, kind.n);
      int idx = 0;
      for (int s = 0; s < kind.n; ++s)
        for (int t = 0; t < kind.n; ++t) {
          const double v = coords(idx++);
          if (s == t)
            m(s, s) += v;
          else if (s < t) {
            m(s, t) += std::complex<double>(irt2 * v, 0.0);
            m(t, s) += std::complex<double>(irt2 * v, 0.0);
          } else {
            m(s, t) += std::complex<double>(0.0, irt2 * v);
            m(t, s) += std::complex<double>(0.0, -irt2 * v);
          }
        }
      return EjaElement(kind, m);
    }
    case EjaFamily::QuatHerm: {
      QuatMat m(kind.n);
      int idx = 0;
      for (int s = 0; s < kind.n; ++s)
        for (int t = s; t < kind.n; ++t) {
          if (s == t) {
            m(s, s) = Quaternion::real(coords(idx++));
          } else {
            Quaternion q(coords(idx), coords(idx + 1), coords(idx + 2), coords(idx + 3));
            idx += 4;
            m(s, t) = q * irt2;
            m(t, s) = q.conj() * irt2;
          }
        }
      return EjaElement(kind, m);
    }
    default:
      return EjaElement(kind, coords);
  }
}

// =============================================================================
// Algebra operations
// =============================================================================

EjaElement jordan_product(const EjaElement& a, const EjaElement& b) {
  require_same_kind(a, b, "jordan_product");
  require_arithmetic(a.kind(), "jordan_product");
  switch (a.kind().family) {
    case EjaFamily::RealSym: {
      Eigen::MatrixXd p = 0.5 * (a.real_mat() * b.real_mat() + b.real_mat() * a.real_mat());
      return EjaElement(a.kind(), p);
    }
    case EjaFamily::ComplexHerm: {
      Eigen::MatrixXcd p = 0.5 * (a.cplx_mat() * b.cplx_mat() + b.cplx_mat() * a.cplx_mat());
      return EjaElement(a.kind(), p);
    }
    case EjaFamily::QuatHerm: {
      QuatMat p = (a.quat_mat().mul(b.quat_mat()) + b.quat_mat().mul(a.quat_mat())) * 0.5;
      return EjaElement(a.kind(), p);
    }
    default: {
      const auto& u = a.spin_vec();
      const auto& v = b.spin_vec();
      const int s = a.kind().n;
      Eigen::VectorXd r(s);
      r(0) = u.dot(v);  // tu + x.y with t stored at index 0
      r.tail(s - 1) = u(0) * v.tail(s - 1) + v(0) * u.tail(s - 1);
      return EjaElement(a.kind(), r);
    }
  }
}

double eja_trace(const EjaElement& a) {
  switch (a.kind().family) {
    case EjaFamily::RealSym:
      return a.real_mat().trace();
    case EjaFamily::ComplexHerm:
      return a.cplx_mat().trace().real();
    case EjaFamily::QuatHerm:
      return a.quat_mat().trace_real();
    default:
      return 2.0 * a.spin_vec()(0);  // eigenvalues t +/- |x| sum to 2t
  }
}

double inner_product(const EjaElement& a, const EjaElement& b) {
  require_same_kind(a, b, "inner_product");
  return eja_trace(jordan_product(a, b));
}

// =============================================================================
// Spectral theory
// =============================================================================

namespace {

// Sorts (eigenvalue, frame) pairs by descending eigenvalue, stable.
void sort_descending(SpectralResult& r) {
  const int k = static_cast<int>(r.frame.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return r.eigenvalues(i) > r.eigenvalues(j); });
  Eigen::VectorXd ev(k);
  std::vector<EjaElement> fr;
  fr.reserve(k);
  for (int i = 0; i < k; ++i) {
    ev(i) = r.eigenvalues(order[i]);
    fr.push_back(r.frame[order[i]]);
  }
  r.eigenvalues = ev;
  r.frame = std::move(fr);
}

SpectralResult spectral_real(const EjaElement& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real_mat());
  SpectralResult r;
  const int n = a.kind().n;
  r.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    r.eigenvalues(i) = es.eigenvalues()(i);
    Eigen::VectorXd v = es.eigenvectors().col(i);
    r.frame.emplace_back(a.kind(), Eigen::MatrixXd(v * v.transpose()));
  }
  sort_descending(r);
  return r;
}

SpectralResult spectral_complex(const EjaElement& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.cplx_mat());
  SpectralResult r;
  const int n = a.kind().n;
  r.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    r.eigenvalues(i) = es.eigenvalues()(i);
    Eigen::VectorXcd v = es.eigenvectors().col(i);
    r.frame.emplace_back(a.kind(), Eigen::MatrixXcd(v * v.adjoint()));
  }
  sort_descending(r);
  return r;
}

// The antiunitary partner J*conj(v) with J = [[0, I], [-I, 0]]; for a
// Hermitian adjoint embedding, v and its partner span one quaternionic line
// and share their eigenvalue.
Eigen::VectorXcd j_partner(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size()) / 2;
  Eigen::VectorXcd w(2 * n);
  w.head(n) = v.tail(n).conjugate();
  w.tail(n) = -v.head(n).conjugate();
  return w;
}

SpectralResult spectral_quat(const EjaElement& a) {
  const int n = a.kind().n;
  Eigen::MatrixXcd psi = a.quat_mat().complex_adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(psi);

  // Greedy selection of one representative per quaternionic line. Candidates
  // are orthonormal, so a candidate either falls inside the span of already
  // chosen lines (small residual) or contributes a new line.
  std::vector<Eigen::VectorXcd> reps;
  std::vector<double> vals;
  for (int k = 0; k < 2 * n && static_cast<int>(reps.size()) < n; ++k) {
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    for (const auto& u : reps) {
      v -= u * (u.adjoint() * v);
      Eigen::VectorXcd w = j_partner(u);
      v -= w * (w.adjoint() * v);
    }
    const double nrm = v.norm();
    if (nrm > 0.4) {
      v /= nrm;
      reps.push_back(v);
      vals.push_back((v.adjoint() * psi * v)(0, 0).real());
    }
  }
  if (static_cast<int>(reps.size()) != n)
    throw std::runtime_error("spectral_quat: failed to pair the adjoint eigenbasis");

  SpectralResult r;
  r.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    r.eigenvalues(i) = vals[i];
    const Eigen::VectorXcd& v = reps[i];
    Eigen::VectorXcd w = j_partner(v);
    Eigen::MatrixXcd proj = v * v.adjoint() + w * w.adjoint();
    r.frame.emplace_back(a.kind(), QuatMat::from_complex_adjoint(proj));
  }
  sort_descending(r);
  return r;
}

SpectralResult spectral_spin(const EjaElement& a) {
  const int s = a.kind().n;
  const double t = a.spin_vec()(0);
  Eigen::VectorXd x = a.spin_vec().tail(s - 1);
  const double nx = x.norm();
  Eigen::VectorXd dir;
  if (nx > 0.0) {
    dir = x / nx;
  } else {
    dir = Eigen::VectorXd::Zero(s - 1);
    dir(0) = 1.0;  // tie-break for the zero vector
  }
  SpectralResult r;
  r.eigenvalues.resize(2);
  r.eigenvalues << t + nx, t - nx;
  Eigen::VectorXd fplus(s), fminus(s);
  fplus(0) = 0.5;
  fplus.tail(s - 1) = 0.5 * dir;
  fminus(0) = 0.5;
  fminus.tail(s - 1) = -0.5 * dir;
  r.frame.emplace_back(a.kind(), fplus);
  r.frame.emplace_back(a.kind(), fminus);
  return r;
}

}  // namespace

SpectralResult spectral_decompose(const EjaElement& a) {
  require_arithmetic(a.kind(), "spectral_decompose");
  switch (a.kind().family) {
    case EjaFamily::RealSym:
      return spectral_real(a);
    case EjaFamily::ComplexHerm:
      return spectral_complex(a);
    case EjaFamily::QuatHerm:
      return spectral_quat(a);
    default:
      return spectral_spin(a);
  }
}

Eigen::VectorXd eja_eigenvalues(const EjaElement& a) {
  require_arithmetic(a.kind(), "eja_eigenvalues");
  switch (a.kind().family) {
    case EjaFamily::RealSym: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real_mat(), Eigen::EigenvaluesOnly);
      return es.eigenvalues().reverse();
    }
    case EjaFamily::ComplexHerm: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.cplx_mat(), Eigen::EigenvaluesOnly);
      return es.eigenvalues().reverse();
    }
    case EjaFamily::QuatHerm: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.quat_mat().complex_adjoint(),
                                                         Eigen::EigenvaluesOnly);
      // Embedding doubles every eigenvalue; take each pair once (ascending
      // order guarantees pairs are adjacent).
      const int n = a.kind().n;
      Eigen::VectorXd out(n);
      for (int i = 0; i < n; ++i) out(n - 1 - i) = es.eigenvalues()(2 * i);
      return out;
    }
    default: {
      const double t = a.spin_vec()(0);
      const double nx = a.spin_vec().tail(a.kind().n - 1).norm();
      Eigen::VectorXd out(2);
      out << t + nx, t - nx;
      return out;
    }
  }
}

bool is_idempotent(const EjaElement& a, double tol) {
  return jordan_product(a, a).max_abs_diff(a) <= tol;
}

bool is_primitive_idempotent(const EjaElement& a, double tol) {
  return is_idempotent(a, tol) && std::abs(eja_trace(a) - 1.0) <= tol;
}

bool is_jordan_frame(const std::vector<EjaElement>& elems, double tol) {
  if (elems.empty()) return false;
  const EjaKind kind = elems.front().kind();
  for (const auto& e : elems)
    if (e.kind() != kind) throw std::invalid_argument("is_jordan_frame: kind mismatch");
  EjaElement sum = EjaElement::zero(kind);
  for (const auto& e : elems) {
    if (!is_primitive_idempotent(e, tol)) return false;
    sum = sum + e;
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (std::abs(inner_product(elems[i], elems[j])) > tol) return false;
  return sum.max_abs_diff(EjaElement::identity(kind)) <= tol;
}

bool cone_membership(const EjaElement& a, double tol) {
  Eigen::VectorXd ev = eja_eigenvalues(a);
  return ev.minCoeff() >= -tol;
}

double jordan_identity_defect(const EjaElement& x, const EjaElement& y) {
  EjaElement x2 = jordan_product(x, x);
  EjaElement lhs = jordan_product(x2, jordan_product(y, x));
  EjaElement rhs = jordan_product(jordan_product(x2, y), x);
  return lhs.max_abs_diff(rhs);
}

// =============================================================================
// Direct sums
// =============================================================================

int DirectSumSpace::rank() const {
  int r = 0;
  for (const auto& k : summands) r += k.rank();
  return r;
}

long long DirectSumSpace::dim() const {
  long long d = 0;
  for (const auto& k : summands) d += k.dim();
  return d;
}

std::vector<EjaElement> direct_sum_split(const DirectSumSpace& space,
                                         const Eigen::VectorXd& coords) {
  if (coords.size() != space.dim())
    throw std::invalid_argument("direct_sum_split: coordinate length mismatch");
  std::vector<EjaElement> parts;
  parts.reserve(space.summands.size());
  long long off = 0;
  for (const auto& kind : space.summands) {
    const long long d = kind.dim();
    parts.push_back(EjaElement::from_coords(kind, coords.segment(off, d)));
    off += d;
  }
  return parts;
}

Eigen::VectorXd direct_sum_join(const DirectSumSpace& space,
                                const std::vector<EjaElement>& parts) {
  if (parts.size() != space.summands.size())
    throw std::invalid_argument("direct_sum_join: summand count mismatch");
  Eigen::VectorXd coords(space.dim());
  long long off = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].kind() != space.summands[i])
      throw std::invalid_argument("direct_sum_join: kind mismatch at summand");
    const long long d = space.summands[i].dim();
    coords.segment(off, d) = parts[i].to_coords();
    off += d;
  }
  return coords;
}

}  // namespace jordanopt
