#pragma once

// Postulate verifiers: seed-deterministic checkers that exercise the
// structural postulates on a concrete system and report the worst deviation
// found. A report passes when every sampled check lands inside its pinned
// tolerance and no witness was recorded.

#include <cstdint>
#include <string>
#include <vector>

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/system.hpp"

namespace jordanopt {

enum class Postulate {
  SymmetricSharpness,
  CompleteMixing,
  Filtering,
  LocalEquality,
  PerfectDistinguishability,
  Indistinguishability,
};

std::string postulate_name(Postulate p);

struct VerificationReport {
  Postulate postulate = Postulate::SymmetricSharpness;
  SystemSpec system;
  int trials = 0;
  double max_deviation = 0.0;
  bool passed = false;
  std::vector<std::string> witnesses;
};

// Pure-state sharpness: the dual effect of a pure state is the unique
// maximal effect firing with certainty on it, and the duality pairing is
// symmetric. Pinned tolerances: 1e-10 for certainty and symmetry, 1e-6 for
// the uniqueness distance.
VerificationReport verify_symmetric_sharpness(const SystemSpec& system, int trials,
                                              std::uint64_t seed);

// Complete mixedness: the minimum probability over maximal effects equals
// the smallest state eigenvalue, and it clears tol exactly when the state
// has full rank. Trials alternate full-rank and rank-deficient samples.
VerificationReport verify_complete_mixing(const SystemSpec& system, int trials,
                                          std::uint64_t seed, double tol = 1e-9);

// Filtering: for sampled pure targets and a transmission grid, the filter
// scales its target by c, fixes the orthogonal face pointwise, inverts
// exactly for c >= 0.1, and degenerates to the complement projection at
// c = 0.
VerificationReport verify_filtering(const SystemSpec& system, int trials, std::uint64_t seed);

// Local process tomography: composite dimensions multiply, product states
// span the composite space, and Choi equality coincides with equality of
// the extended actions across idle partners.
VerificationReport verify_local_equality(const SystemSpec& a, const SystemSpec& b, int trials,
                                         std::uint64_t seed, double tol = 1e-9);

enum class TheoryClass { Classical, FullyQuantum, Hybrid, TrivialBoth };

std::string theory_class_name(TheoryClass c);

// Structural classification from the block pattern alone.
TheoryClass classify_theory(const SystemSpec& system);

struct TheoryClassification {
  TheoryClass structural = TheoryClass::TrivialBoth;
  TheoryClass operational = TheoryClass::TrivialBoth;

  // passed means the respective postulate holds on this system.
  VerificationReport distinguishability;
  VerificationReport indistinguishability;
};

// Runs the two operational witness tests and cross-checks the structural
// rule against the observed behaviour of sampled pure pairs.
TheoryClassification classify_theory_operational(const SystemSpec& system, int trials,
                                                 std::uint64_t seed);

// Maximal effect predicate used by the sharpness and mixing verifiers: a
// feasible effect of unit trace supported on a single block with rank one.
bool is_maximal_effect(const BlockHermitian& e, double tol = 1e-9);

}  // namespace jordanopt
