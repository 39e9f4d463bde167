#pragma once

// Seeded random sampling for states, effects, and algebra elements. All
// randomness flows through the SplitMix64 generator below so runs are
// reproducible byte-for-byte across platforms; nothing here touches
// std::random_device or distribution objects with unspecified algorithms.

#include <Eigen/Dense>
#include <cstdint>

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/eja.hpp"
#include "jordanopt/system.hpp"

namespace jordanopt {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform();

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian();

  std::complex<double> complex_gaussian();

  // Picks an index in [0, weights.size()) with probability proportional to
  // the (nonnegative) weights.
  int pick_weighted(const std::vector<double>& weights);

  // Stateless sub-seed derivation, one independent stream per trial index.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

// Haar-like unit vector: i.i.d. complex Gaussian entries, normalized.
Eigen::VectorXcd random_unit_vector(Rng& rng, int dim);

// Pure state with the owning block chosen with probability proportional to
// its dimension, so every ray of the model is reachable.
PureState random_pure_state(Rng& rng, const SystemSpec& system);

// Gaussian Hermitian matrix (GUE-like, not normalized).
Eigen::MatrixXcd random_hermitian(Rng& rng, int n);

// Wishart matrix G G^dagger with G an n x cols complex Gaussian matrix;
// almost surely rank min(n, cols).
Eigen::MatrixXcd random_wishart(Rng& rng, int n, int cols);

// Full-rank normalized state: per-block Wishart, global trace one.
BlockHermitian random_state(Rng& rng, const SystemSpec& system);

// Hermitian (generally indefinite) model element with Gaussian blocks.
BlockHermitian random_hermitian_element(Rng& rng, const SystemSpec& system);

// Normalized state with a strict rank deficiency: one block of dimension
// >= 2 gets a Wishart of reduced rank, or for all-scalar systems one block
// is zeroed. Requires the system to admit a deficient state at all, which
// excludes the single-scalar system; throws std::invalid_argument there.
BlockHermitian random_rank_deficient_state(Rng& rng, const SystemSpec& system);

// Random element of the named simple algebra with Gaussian coordinates.
EjaElement random_eja_element(Rng& rng, const EjaKind& kind);

}  // namespace jordanopt
