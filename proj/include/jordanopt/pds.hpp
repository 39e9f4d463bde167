#pragma once

// Perfectly distinguishable sets of pure states and the face / kernel
// predicates built from their projector sum. A set is perfectly
// distinguishable exactly when its members are pairwise orthogonal; it is
// maximal when its size reaches the system rank.

#include <vector>

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/system.hpp"

namespace jordanopt {

struct Pds {
  SystemSpec system;
  std::vector<PureState> members;

  Pds() = default;
  explicit Pds(SystemSpec sys) : system(std::move(sys)) {}
  Pds(SystemSpec sys, std::vector<PureState> mem);

  int size() const { return static_cast<int>(members.size()); }

  // Projector sum of the members, one term per member in its block.
  BlockHermitian chi() const;
};

enum class PdsStatus { NotPds, Pds, Mpds };

// Orthogonality check: members in different blocks never overlap, members in
// the same block must have vanishing amplitude inner product.
PdsStatus pds_status(const Pds& set, double tol = 1e-9);

// Orthonormal completion: for each block, a basis of the orthogonal
// complement of the members' span, enumerated block by block in eigenvector
// order. The result completes the input to a maximal set. Throws
// std::invalid_argument when the input is not perfectly distinguishable.
Pds complementary_pds(const Pds& set, double tol = 1e-9);

enum class FaceKernelStatus { Neither, InFace, InKernel, Both };

// Locates a PSD element relative to the face generated by the set: InFace
// when the projector sum captures the full trace, InKernel when it captures
// none of it. The zero element satisfies both.
FaceKernelStatus face_kernel_membership(const BlockHermitian& rho, const Pds& set,
                                        double tol = 1e-9);

}  // namespace jordanopt
