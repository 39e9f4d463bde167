#include "jordanopt/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "jordanopt/composite.hpp"
#include "jordanopt/filter.hpp"
#include "jordanopt/process.hpp"
#include "jordanopt/sampling.hpp"

namespace jordanopt {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void track(VerificationReport& rep, double deviation, double limit, const std::string& what) {
  rep.max_deviation = std::max(rep.max_deviation, deviation);
  if (deviation > limit) {
    rep.passed = false;
    if (rep.witnesses.size() < 8)
      rep.witnesses.push_back(what + " deviated by " + fmt(deviation) + " (limit " + fmt(limit) +
                              ")");
  }
}

void fail(VerificationReport& rep, const std::string& what) {
  rep.passed = false;
  if (rep.witnesses.size() < 8) rep.witnesses.push_back(what);
}

// Smallest eigenvalue over all blocks together with the block and
// eigenvector achieving it.
struct MinEig {
  double value = std::numeric_limits<double>::infinity();
  int block = -1;
  Eigen::VectorXcd vector;
};

MinEig global_min_eig(const BlockHermitian& rho) {
  MinEig best;
  for (int l = 0; l < rho.block_count(); ++l) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.block(l));
    if (es.eigenvalues()(0) < best.value) {
      best.value = es.eigenvalues()(0);
      best.block = l;
      best.vector = es.eigenvectors().col(0);
    }
  }
  return best;
}

// Unit vector in the same block at angle roughly eps from phi; returns false
// when the block is one-dimensional and no perturbation exists.
bool perturbed_state(Rng& rng, const PureState& phi, double eps, PureState& out) {
  const int d = static_cast<int>(phi.amplitudes.size());
  if (d < 2) return false;
  Eigen::VectorXcd w = random_unit_vector(rng, d);
  w -= phi.amplitudes * phi.amplitudes.dot(w);
  const double n = w.norm();
  if (n < 1e-12) return false;
  Eigen::VectorXcd v = (phi.amplitudes + (eps / n) * w).normalized();
  out = PureState(phi.system, phi.block, std::move(v));
  return true;
}

}  // namespace

std::string postulate_name(Postulate p) {
  switch (p) {
    case Postulate::SymmetricSharpness:
      return "SymmetricSharpness";
    case Postulate::CompleteMixing:
      return "CompleteMixing";
    case Postulate::Filtering:
      return "Filtering";
    case Postulate::LocalEquality:
      return "LocalEquality";
    case Postulate::PerfectDistinguishability:
      return "PerfectDistinguishability";
    case Postulate::Indistinguishability:
      return "Indistinguishability";
  }
  return "Unknown";
}

bool is_maximal_effect(const BlockHermitian& e, double tol) {
  if (!is_feasible_effect(e, tol)) return false;
  if (std::abs(e.trace() - 1.0) > tol) return false;
  int support = -1;
  for (int l = 0; l < e.block_count(); ++l) {
    if (e.block(l).cwiseAbs().maxCoeff() <= tol) continue;
    if (support >= 0) return false;
    support = l;
  }
  if (support < 0) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e.block(support), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  for (int i = 0; i + 1 < ev.size(); ++i)
    if (ev(i) > tol) return false;  // anything besides the top eigenvalue
  return std::abs(ev(ev.size() - 1) - 1.0) <= tol;
}

// =============================================================================
// Postulate 1: symmetric sharpness
// =============================================================================

VerificationReport verify_symmetric_sharpness(const SystemSpec& system, int trials,
                                              std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_symmetric_sharpness: trials must be >= 1");
  VerificationReport rep;
  rep.postulate = Postulate::SymmetricSharpness;
  rep.system = system;
  rep.trials = trials;
  rep.passed = true;

  constexpr double kCertaintyTol = 1e-10;
  constexpr double kUniqueGate = 1e-10;
  constexpr double kUniqueDistance = 1e-6;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    const PureState phi = random_pure_state(rng, system);
    const PureState psi = random_pure_state(rng, system);
    const BlockHermitian phi_bh = phi.to_block_hermitian();
    const BlockHermitian psi_bh = psi.to_block_hermitian();
    const BlockHermitian phi_eff = dagger(phi_bh, DaggerDirection::StateToEffect);
    const BlockHermitian psi_eff = dagger(psi_bh, DaggerDirection::StateToEffect);

    track(rep, std::abs(probability(phi_eff, phi_bh) - 1.0), kCertaintyTol,
          "sharp certainty probability(phi_dag, phi)");
    track(rep, std::abs(probability(psi_eff, phi_bh) - probability(phi_eff, psi_bh)),
          kCertaintyTol, "duality symmetry");

    // Uniqueness: candidates near and far from the dual effect, plus a
    // non-maximal mixture that the rank test must exclude.
    std::vector<BlockHermitian> candidates;
    candidates.push_back(phi_eff);
    PureState near_phi, far_phi;
    if (perturbed_state(rng, phi, 1e-7, near_phi)) candidates.push_back(near_phi.to_block_hermitian());
    if (perturbed_state(rng, phi, 1e-3, far_phi)) candidates.push_back(far_phi.to_block_hermitian());
    candidates.push_back(random_pure_state(rng, system).to_block_hermitian());

    for (const auto& e : candidates) {
      if (!is_maximal_effect(e)) {
        fail(rep, "sampled pure effect failed the maximal-effect predicate");
        continue;
      }
      if (probability(e, phi_bh) >= 1.0 - kUniqueGate)
        track(rep, e.frobenius_distance(phi_eff), kUniqueDistance,
              "uniqueness of the certain maximal effect");
    }

    const BlockHermitian mixture = phi_eff * 0.5 + psi_eff * 0.5;
    if (phi_eff.frobenius_distance(psi_eff) > 1e-3 && is_maximal_effect(mixture))
      fail(rep, "mixture of two distinct maximal effects passed the rank test");
  }
  return rep;
}

// =============================================================================
// Postulate 2: complete mixing
// =============================================================================

VerificationReport verify_complete_mixing(const SystemSpec& system, int trials,
                                          std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("verify_complete_mixing: trials must be >= 1");
  VerificationReport rep;
  rep.postulate = Postulate::CompleteMixing;
  rep.system = system;
  rep.trials = trials;
  rep.passed = true;

  constexpr double kExactTol = 1e-10;
  const bool can_deplete = system.rank() > 1;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    const bool deficient = can_deplete && (trial % 2 == 1);
    BlockHermitian rho = BlockHermitian::zero(system);
    if (trial == 0) {
      rho = BlockHermitian::identity(system) * (1.0 / system.rank());
    } else if (deficient) {
      rho = random_rank_deficient_state(rng, system);
    } else {
      rho = random_state(rng, system);
    }

    const MinEig mn = global_min_eig(rho);
    BlockHermitian witness_effect = BlockHermitian::zero(system);
    witness_effect.block(mn.block) = mn.vector * mn.vector.adjoint();

    if (!is_maximal_effect(witness_effect))
      fail(rep, "minimizing eigenvector did not yield a maximal effect");
    track(rep, std::abs(probability(witness_effect, rho) - mn.value), kExactTol,
          "effect minimization equals smallest eigenvalue");

    // A handful of random maximal effects can only do worse.
    for (int k = 0; k < 4; ++k) {
      const BlockHermitian e = random_pure_state(rng, system).to_block_hermitian();
      if (probability(e, rho) < mn.value - kExactTol)
        fail(rep, "random maximal effect undercut the eigenvalue minimum");
    }

    const bool completely_mixed = mn.value > tol;
    if (deficient && completely_mixed)
      fail(rep, "rank-deficient sample reported completely mixed (min eig " + fmt(mn.value) + ")");
    if (!deficient && !completely_mixed)
      fail(rep, "full-rank sample not completely mixed (min eig " + fmt(mn.value) + ")");
  }
  return rep;
}

// =============================================================================
// Postulate 3: filtering
// =============================================================================

VerificationReport verify_filtering(const SystemSpec& system, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_filtering: trials must be >= 1");
  VerificationReport rep;
  rep.postulate = Postulate::Filtering;
  rep.system = system;
  rep.trials = trials;
  rep.passed = true;

  constexpr double kAxiomTol = 1e-10;
  constexpr double kReverseTol = 1e-9;
  const double c_grid[] = {0.0, 0.1, 0.5, 0.9, 1.0};
  const ProcessChoi id = identity_process(system);

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    const PureState phi = random_pure_state(rng, system);
    const double c = c_grid[trial % 5];
    const Filter f = make_filter(phi, c);
    const ProcessChoi proc = filter_to_process(f);
    const BlockHermitian phi_bh = phi.to_block_hermitian();

    // Axiom 1: the target is scaled by exactly c.
    track(rep, apply(proc, phi_bh).max_abs_diff(phi_bh * c), kAxiomTol,
          "filter scales its target by c");

    // Axiom 2: the orthogonal face is fixed pointwise, spanned by pair
    // combinations of the complement members.
    const Pds complement = complementary_pds(Pds(system, {phi}));
    const auto& mem = complement.members;
    for (size_t i = 0; i < mem.size(); ++i) {
      for (size_t j = i; j < mem.size(); ++j) {
        if (mem[i].block != mem[j].block) continue;
        std::vector<Eigen::VectorXcd> dirs;
        if (i == j) {
          dirs.push_back(mem[i].amplitudes);
        } else {
          dirs.push_back((mem[i].amplitudes + mem[j].amplitudes) / std::sqrt(2.0));
          dirs.push_back((mem[i].amplitudes +
                          std::complex<double>(0.0, 1.0) * mem[j].amplitudes) /
                         std::sqrt(2.0));
        }
        for (const auto& d : dirs) {
          const PureState sigma(system, mem[i].block, d.normalized());
          const BlockHermitian sig = sigma.to_block_hermitian();
          track(rep, apply(proc, sig).max_abs_diff(sig), kAxiomTol,
                "filter fixes the orthogonal face");
        }
      }
    }

    if (c >= 0.1)
      track(rep, compose_sequential(filter_inverse(f), proc).max_abs_diff(id),
            kReverseTol, "filter reversibility");
    if (c == 0.0)
      track(rep, proc.max_abs_diff(projection_process(complement)), kAxiomTol,
            "zero filter equals complement projection");
    if (c == 1.0)
      track(rep, proc.max_abs_diff(id), kAxiomTol, "unit filter equals identity");
  }
  return rep;
}

// =============================================================================
// Postulate 4: local equality
// =============================================================================

namespace {

bool actions_agree(const ProcessChoi& f, const ProcessChoi& g, std::uint64_t seed, int samples,
                   double tol) {
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    const BlockHermitian rho = random_state(rng, f.input);
    if (apply(f, rho).max_abs_diff(apply(g, rho)) > tol) return false;
  }
  return true;
}

bool locally_equal_all_partners(const ProcessChoi& f, const ProcessChoi& g, std::uint64_t seed,
                                double tol) {
  if (!actions_agree(f, g, Rng::derive(seed, 0), 8, tol)) return false;
  const SystemSpec partners[] = {SystemSpec({1}), SystemSpec({2}), SystemSpec({1, 1})};
  for (size_t i = 0; i < 3; ++i)
    if (!locally_equal(f, g, partners[i], 8, Rng::derive(seed, i + 1), tol)) return false;
  return true;
}

}  // namespace

VerificationReport verify_local_equality(const SystemSpec& a, const SystemSpec& b, int trials,
                                         std::uint64_t seed, double tol) {
  VerificationReport rep;
  rep.postulate = Postulate::LocalEquality;
  rep.system = tensor_system(a, b);
  rep.trials = trials;
  rep.passed = true;

  if (rep.system.rank() != a.rank() * b.rank())
    fail(rep, "composite rank is not multiplicative");
  if (rep.system.dim() != a.dim() * b.dim())
    fail(rep, "composite dimension is not multiplicative");

  if (!local_tomography_span(a, b, Rng::derive(seed, 0xA11CE)))
    fail(rep, "product states fail to span the composite space");

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    const ProcessChoi f = choi_from_kraus(random_tp_process(rng, a, b));
    const std::uint64_t sub = Rng::derive(seed, 0x10000u + static_cast<std::uint64_t>(trial));

    if (trial % 2 == 0) {
      // Reconstruction round trip produces an equal process.
      const ProcessChoi g = choi_from_kraus(kraus_from_choi(f));
      track(rep, f.max_abs_diff(g), tol, "Choi reconstruction distance");
      const bool eq = processes_equal(f, g, tol);
      const bool loc = locally_equal_all_partners(f, g, sub, tol);
      if (!eq) fail(rep, "reconstructed process not Choi-equal");
      if (!loc) fail(rep, "reconstructed process not locally equal");
    } else {
      ProcessChoi g = f;
      const int d = static_cast<int>(g.choi.front().rows());
      Rng prng(Rng::derive(seed, 0x20000u + static_cast<std::uint64_t>(trial)));
      g.choi.front() += 1e-3 * random_hermitian(prng, d);
      const bool eq = processes_equal(f, g, tol);
      const bool loc = locally_equal_all_partners(f, g, sub, tol);
      if (eq) fail(rep, "perturbed process reported Choi-equal");
      if (loc) fail(rep, "perturbed process reported locally equal");
    }
  }
  return rep;
}

// =============================================================================
// Theory classification
// =============================================================================

std::string theory_class_name(TheoryClass c) {
  switch (c) {
    case TheoryClass::Classical:
      return "Classical";
    case TheoryClass::FullyQuantum:
      return "FullyQuantum";
    case TheoryClass::Hybrid:
      return "Hybrid";
    case TheoryClass::TrivialBoth:
      return "TrivialBoth";
  }
  return "Unknown";
}

TheoryClass classify_theory(const SystemSpec& system) {
  if (system.rank() == 1) return TheoryClass::TrivialBoth;
  bool all_scalar = true;
  for (int d : system.blocks)
    if (d > 1) all_scalar = false;
  if (all_scalar) return TheoryClass::Classical;
  if (system.block_count() == 1) return TheoryClass::FullyQuantum;
  return TheoryClass::Hybrid;
}

TheoryClassification classify_theory_operational(const SystemSpec& system, int trials,
                                                 std::uint64_t seed) {
  TheoryClassification out;
  out.structural = classify_theory(system);

  VerificationReport& dist = out.distinguishability;
  dist.postulate = Postulate::PerfectDistinguishability;
  dist.system = system;
  dist.trials = trials;
  dist.passed = true;

  VerificationReport& indist = out.indistinguishability;
  indist.postulate = Postulate::Indistinguishability;
  indist.system = system;
  indist.trials = trials;
  indist.passed = true;

  constexpr double kDistinct = 1e-6;
  constexpr double kOrthoTol = 1e-9;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    const PureState p1 = random_pure_state(rng, system);
    const PureState p2 = random_pure_state(rng, system);
    const BlockHermitian b1 = p1.to_block_hermitian();
    const BlockHermitian b2 = p2.to_block_hermitian();

    // Perfect distinguishability: distinct pure pairs must be orthogonal.
    if (b1.frobenius_distance(b2) > kDistinct) {
      const double overlap = probability(b1, b2);
      dist.max_deviation = std::max(dist.max_deviation, overlap);
      if (overlap > kOrthoTol)
        fail(dist, "distinct pure pair with overlap " + fmt(overlap));
    }

    // Indistinguishability: a pure sibling non-orthogonal to both members.
    if (p1.block != p2.block) {
      fail(indist, "pure pair split across blocks admits no common sibling");
      continue;
    }
    Eigen::VectorXcd dir;
    const std::complex<double> z = p1.amplitudes.dot(p2.amplitudes);
    if (std::abs(z) < 1e-12)
      dir = p1.amplitudes + p2.amplitudes;
    else
      dir = p1.amplitudes + (std::conj(z) / std::abs(z)) * p2.amplitudes;
    const PureState sibling(system, p1.block, dir.normalized());
    const BlockHermitian sib = sibling.to_block_hermitian();
    const double o1 = probability(sib, b1);
    const double o2 = probability(sib, b2);
    if (o1 <= kOrthoTol || o2 <= kOrthoTol)
      fail(indist, "constructed sibling orthogonal to a member (overlaps " + fmt(o1) + ", " +
                       fmt(o2) + ")");
  }

  const bool has_5c = dist.passed;
  const bool has_5q = indist.passed;
  if (has_5c && has_5q)
    out.operational = TheoryClass::TrivialBoth;
  else if (has_5c)
    out.operational = TheoryClass::Classical;
  else if (has_5q)
    out.operational = TheoryClass::FullyQuantum;
  else
    out.operational = TheoryClass::Hybrid;
  return out;
}

}  // namespace jordanopt
