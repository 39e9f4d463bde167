#pragma once

// Filters: the one-parameter family of processes that attenuate a chosen
// pure state while fixing everything orthogonal to it, together with their
// reverse maps and the projection process of a distinguishable set.

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/pds.hpp"
#include "jordanopt/process.hpp"

namespace jordanopt {

struct Filter {
  PureState target;
  double c = 1.0;

  // Forward operator: sqrt(c) P + (1 - P) on the target block, identity on
  // the rest. Conjugation by it scales the target by c and fixes the
  // orthogonal complement.
  BlockHermitian e;

  // Reverse operator: P + sqrt(c) (1 - P) on the target block, sqrt(c)
  // times identity on the rest. The product e_tilde * e is sqrt(c) times
  // the identity on every block.
  BlockHermitian e_tilde;
};

// Builds the filter with transmission c for the given pure state. c must
// lie in [0, 1]; anything else throws std::invalid_argument.
Filter make_filter(const PureState& phi, double c);

// Direct conjugation rho -> E rho E, cheaper than going through the Choi
// form and exactly equal to it.
BlockHermitian filter_apply(const Filter& f, const BlockHermitian& rho);

// The filter as a process, single Kraus operator per diagonal block pair.
ProcessChoi filter_to_process(const Filter& f);

// Inverse up to normalization: conjugation by e_tilde / sqrt(c), so that
// composing it after the filter gives the identity process exactly.
// Requires c > 0.
ProcessChoi filter_inverse(const Filter& f);

// Conjugation by sqrt(p) P + (1 - P) for arbitrary p > 0; the same shape as
// a filter but allowed to amplify. Used to build homogeneity maps.
ProcessChoi filter_like_process(const PureState& phi, double p);

// Projection onto the face of a distinguishable set: rho -> chi rho chi
// blockwise, one projector Kraus operator per block.
ProcessChoi projection_process(const Pds& set);

}  // namespace jordanopt
