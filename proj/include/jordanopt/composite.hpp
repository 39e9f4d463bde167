#pragma once

// Composite systems under the block-wise tensor product. Composite blocks
// are indexed row-major over factor block pairs, so flat block layout is
// associative and regrouping a composite is a relabel, never a data move.
// The cup and cap two-system elements and the partial pairings they enter
// live here, together with the local tomography rank check.

#include <cstdint>
#include <utility>

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/pds.hpp"
#include "jordanopt/system.hpp"

namespace jordanopt {

// Kronecker product, row-major convention: (A kron B)(i*p+k, j*q+l) = A(i,j)B(k,l).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Composite descriptor: block (i,j) of A tensor B has dimension n_i * m_j,
// flattened as i * b.block_count() + j.
SystemSpec tensor_system(const SystemSpec& a, const SystemSpec& b);

// The factor-pair / flat-index bijection behind that layout. Both directions
// are total on their range and out-of-range indices throw std::out_of_range.
struct CompositeIndexMap {
  SystemSpec left;
  SystemSpec right;
  SystemSpec composite;

  int block_index(int i, int j) const;
  std::pair<int, int> factor_blocks(int flat) const;
};

CompositeIndexMap composite_index_map(const SystemSpec& a, const SystemSpec& b);

// Block-wise Kronecker product of model elements.
BlockHermitian tensor_element(const BlockHermitian& x, const BlockHermitian& y);

// Product of pure states lands in composite block (i,j) with Kronecker
// amplitudes.
PureState tensor_pure(const PureState& x, const PureState& y);

// Reinterprets the same flat block data under a regrouped composite label.
// Requires the target to list identical block dimensions in order.
BlockHermitian relabel_blocks(const BlockHermitian& x, const SystemSpec& target);

// The cup: sum over the canonical basis of gamma_mu * w_mu tensor w_mu.
// Blockwise this is the unnormalized maximally entangled projector on each
// diagonal block pair and zero elsewhere.
BlockHermitian cup_state(const SystemSpec& s);

// The cap is the dual of the cup, which is the same coordinate vector.
BlockHermitian cap_effect(const SystemSpec& s);

// Both halves of the dual pair bundled with the factor system they double.
struct CupCap {
  SystemSpec system;
  BlockHermitian cup;
  BlockHermitian cap;
};

CupCap cup(const SystemSpec& s);

// Unsigned diagonal sums over the same basis; for the canonical orthonormal
// basis the two coincide. eta fails positivity whenever a block has
// dimension at least two, which is what separates it from the cup.
BlockHermitian eta_element(const SystemSpec& s);
BlockHermitian epsilon_element(const SystemSpec& s);

// Partial pairing of a two-system element against an effect on one factor.
// pair_left consumes the first factor: out_b = sum_a Tr_1[(e_a ox I) tau_(a,b)].
// pair_right consumes the second: out_a = sum_b Tr_2[(I ox e_b) tau_(a,b)].
BlockHermitian pair_left(const BlockHermitian& e, const BlockHermitian& tau,
                         const SystemSpec& s1, const SystemSpec& s2);
BlockHermitian pair_right(const BlockHermitian& tau, const BlockHermitian& e,
                          const SystemSpec& s1, const SystemSpec& s2);

// Largest deviation over the two snake equations on the given state: pairing
// the cap against rho tensor cup (and its mirror) must reproduce rho.
double snake_defect(const SystemSpec& s, const BlockHermitian& rho);

// Same contractions with eta and epsilon in place of cup and cap.
double eta_defect(const SystemSpec& s, const BlockHermitian& rho);

// Worst snake deviation over a spanning set of states: the unit element plus
// every basis element shifted into the cone by it. Exact zero on all-scalar
// systems.
double snake_check(const SystemSpec& s);

// Worst eta/epsilon contraction deviation over the unit element and the raw
// basis. The identity holds even where eta leaves the cone.
double eta_epsilon_check(const SystemSpec& s);

// Numerical rank of a set of vectorized product states, measured against the
// largest singular value. Local tomography holds when products span the full
// composite dimension.
int local_tomography_rank(const SystemSpec& a, const SystemSpec& b, std::uint64_t seed,
                          int samples = 0, double threshold = 1e-8);
bool local_tomography_span(const SystemSpec& a, const SystemSpec& b, std::uint64_t seed);

// Pairwise products of the factor members, a-major; maximal sets compose to
// a maximal set.
Pds composite_mpds(const Pds& a, const Pds& b);

}  // namespace jordanopt
