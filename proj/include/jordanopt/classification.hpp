#pragma once

// Classification of simple Euclidean Jordan algebras by their (rank, dim)
// signature, and the squared-invariant exclusion check that tests whether a
// composite signature (rank^2, dim^2) lands back on the simple-algebra table.

#include <optional>
#include <string>

#include "jordanopt/eja.hpp"

namespace jordanopt {

// Matches (rank, dim) against the simple-algebra table and returns the
// canonical representative, or nullopt when no simple algebra fits.
//
// Isomorphic rows collapse to one canonical kind:
//   rank 1        -> ComplexHerm(1)   (RealSym(1) and QuatHerm(1) alias it)
//   rank 2 dim 3  -> RealSym(2)       (Spin(3) aliases it)
//   rank 2 dim 4  -> ComplexHerm(2)   (Spin(4) aliases it)
//   rank 2 dim 6  -> QuatHerm(2)      (Spin(6) aliases it)
//   rank 2 dim 5 or >= 7 -> Spin(dim)
//   rank 3 dim 27 -> OctHerm3
//   rank n >= 3   -> whichever of n(n+1)/2, n^2, n(2n-1) equals dim
std::optional<EjaKind> classify_simple(int rank, long long dim);

// Result of squaring rank and dimension of a simple algebra and re-running
// the classifier. Self-pairing of a system with itself produces exactly this
// signature, so a missing match rules the composite out of the table.
struct ExclusionReport {
  EjaKind kind;
  int squared_rank = 0;
  long long squared_dim = 0;
  std::optional<EjaKind> match;
};

ExclusionReport exclusion_check(const EjaKind& kind);

// Text names round-trip through these two functions: "RealSym(2)",
// "ComplexHerm(3)", "QuatHerm(2)", "Spin(5)", "OctHerm3". parse_kind throws
// std::invalid_argument on anything else.
std::string format_kind(const EjaKind& kind);
EjaKind parse_kind(const std::string& text);

}  // namespace jordanopt
