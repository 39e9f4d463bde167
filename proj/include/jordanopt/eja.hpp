#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "jordanopt/quaternion.hpp"

namespace jordanopt {

// =============================================================================
// Simple Euclidean Jordan algebra kinds
// =============================================================================

enum class EjaFamily { RealSym, ComplexHerm, QuatHerm, Spin, OctHerm3 };

// A simple EJA named by family and size parameter: symmetric/Hermitian matrix
// algebras of order n over R, C, H, the spin factor on R x R^{s-1}, and the
// exceptional rank-3 octonionic algebra (metadata only, no arithmetic).
struct EjaKind {
  EjaFamily family = EjaFamily::ComplexHerm;
  int n = 1;  // matrix order for matrix kinds, s for Spin, fixed 3 for OctHerm3

  static EjaKind real_sym(int n) { return {EjaFamily::RealSym, n}; }
  static EjaKind complex_herm(int n) { return {EjaFamily::ComplexHerm, n}; }
  static EjaKind quat_herm(int n) { return {EjaFamily::QuatHerm, n}; }
  static EjaKind spin(int s) { return {EjaFamily::Spin, s}; }
  static EjaKind oct_herm3() { return {EjaFamily::OctHerm3, 3}; }

  int rank() const;
  long long dim() const;
  bool has_arithmetic() const { return family != EjaFamily::OctHerm3; }

  bool operator==(const EjaKind& o) const { return family == o.family && n == o.n; }
  bool operator!=(const EjaKind& o) const { return !(*this == o); }
};

// =============================================================================
// Elements
// =============================================================================

// One element of a simple EJA. Matrix kinds hold a Hermitian matrix over the
// base ring; Spin(s) holds the vector (t, x) in R x R^{s-1} packed as a
// length-s real vector with t first. Exactly one storage member is active,
// selected by kind.family.
class EjaElement {
 public:
  EjaElement() = default;
  EjaElement(EjaKind kind, Eigen::MatrixXd m);    // RealSym
  EjaElement(EjaKind kind, Eigen::MatrixXcd m);   // ComplexHerm
  EjaElement(EjaKind kind, QuatMat m);            // QuatHerm
  EjaElement(EjaKind kind, Eigen::VectorXd v);    // Spin

  static EjaElement zero(EjaKind kind);
  static EjaElement identity(EjaKind kind);

  const EjaKind& kind() const { return kind_; }
  const Eigen::MatrixXd& real_mat() const;
  const Eigen::MatrixXcd& cplx_mat() const;
  const QuatMat& quat_mat() const;
  const Eigen::VectorXd& spin_vec() const;

  EjaElement operator+(const EjaElement& o) const;
  EjaElement operator-(const EjaElement& o) const;
  EjaElement operator*(double s) const;

  double norm() const;  // sqrt of the algebra inner product with itself
  double max_abs_diff(const EjaElement& o) const;

  // Real coordinates in the kind's fixed orthogonal basis; length = dim(kind).
  // Matrix kinds use the diagonal-then-upper-triangle enumeration with 1/sqrt2
  // off-diagonal normalization; Spin uses the literal (t, x) components.
  Eigen::VectorXd to_coords() const;
  static EjaElement from_coords(EjaKind kind, const Eigen::VectorXd& coords);

 private:
  EjaKind kind_;
  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd, QuatMat, Eigen::VectorXd> data_;
};

// Spectral decomposition into a Jordan frame: a = sum_i eigenvalues[i] * frame[i]
// with rank(kind) primitive idempotents. Eigenvalues are sorted descending;
// under degeneracy the frame is one valid choice among many.
struct SpectralResult {
  Eigen::VectorXd eigenvalues;
  std::vector<EjaElement> frame;
};

// =============================================================================
// Operations
// =============================================================================

// Jordan product. Matrix kinds: (xy + yx)/2 over the base ring.
// Spin: (t, x) o (u, y) = (tu + x.y, ty + ux).
EjaElement jordan_product(const EjaElement& a, const EjaElement& b);

// tr(a o b); the associative inner product <x o y, z> = <y, x o z>.
double inner_product(const EjaElement& a, const EjaElement& b);

// Eigenvalue-sum trace; equals inner_product(a, identity).
double eja_trace(const EjaElement& a);

SpectralResult spectral_decompose(const EjaElement& a);

// Eigenvalues only (descending), cheaper than a full decomposition.
Eigen::VectorXd eja_eigenvalues(const EjaElement& a);

bool is_idempotent(const EjaElement& a, double tol = 1e-9);
bool is_primitive_idempotent(const EjaElement& a, double tol = 1e-9);

// True iff every element is a primitive idempotent, the elements are pairwise
// orthogonal, and they sum to the identity.
bool is_jordan_frame(const std::vector<EjaElement>& elems, double tol = 1e-9);

// Membership in the cone of squares: all eigenvalues >= -tol.
bool cone_membership(const EjaElement& a, double tol = 1e-9);

// Residual of the Jordan identity (x^2 o (y o x)) - ((x^2 o y) o x) in the
// algebra norm; zero for a valid EJA.
double jordan_identity_defect(const EjaElement& x, const EjaElement& y);

// =============================================================================
// Direct sums
// =============================================================================

// The direct sum of simple EJAs; rank and dim are additive over summands.
struct DirectSumSpace {
  std::vector<EjaKind> summands;

  int rank() const;
  long long dim() const;
};

// Splits a coordinate vector of length dim(space) into per-summand elements.
// Coordinates are the concatenation of each summand's to_coords block, so the
// split round-trips exactly.
std::vector<EjaElement> direct_sum_split(const DirectSumSpace& space,
                                         const Eigen::VectorXd& coords);

Eigen::VectorXd direct_sum_join(const DirectSumSpace& space,
                                const std::vector<EjaElement>& parts);

}  // namespace jordanopt
