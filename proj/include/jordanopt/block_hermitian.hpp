#pragma once

// Elements of the block-Hermitian model: one complex Hermitian matrix per
// superselection block. States, effects, and the canonical orthonormal basis
// all live here; the pairing between an effect and a state is the sum of
// real block traces.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "jordanopt/system.hpp"

namespace jordanopt {

class BlockHermitian {
 public:
  BlockHermitian() = default;

  // Takes ownership of per-block matrices; sizes must match the system and
  // each block must be Hermitian within hermiticity_tol (the imaginary part
  // of the diagonal and the defect M - M^dagger are checked).
  BlockHermitian(SystemSpec system, std::vector<Eigen::MatrixXcd> blocks,
                 double hermiticity_tol = 1e-9);

  static BlockHermitian zero(const SystemSpec& system);

  // The unit effect / discard, identity on every block.
  static BlockHermitian identity(const SystemSpec& system);

  const SystemSpec& system() const { return system_; }
  const Eigen::MatrixXcd& block(int l) const { return blocks_.at(static_cast<size_t>(l)); }
  Eigen::MatrixXcd& block(int l) { return blocks_.at(static_cast<size_t>(l)); }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  BlockHermitian operator+(const BlockHermitian& o) const;
  BlockHermitian operator-(const BlockHermitian& o) const;
  BlockHermitian operator*(double s) const;

  // Sum of real block traces.
  double trace() const;

  // Hilbert-Schmidt pairing, sum over blocks of Re Tr(a_l b_l).
  double inner(const BlockHermitian& o) const;

  double frobenius_norm() const;
  double frobenius_distance(const BlockHermitian& o) const;
  double max_abs_diff(const BlockHermitian& o) const;

  // Smallest eigenvalue across all blocks.
  double min_eigenvalue() const;
  bool is_psd(double tol = 1e-9) const { return min_eigenvalue() >= -tol; }

  // Largest deviation from Hermitian symmetry across blocks.
  double hermiticity_defect() const;

  // Coordinates in the canonical orthonormal basis, blocks in order, each
  // block walked over its full (s,t) grid row-major: diagonal entries, then
  // sqrt(2) * Re M(s,t) at s < t, and sqrt(2) * Im M(s,t) at s > t.
  Eigen::VectorXd vectorize() const;
  static BlockHermitian from_vector(const SystemSpec& system, const Eigen::VectorXd& coords);

 private:
  SystemSpec system_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

// Canonical basis bookkeeping. Flat indices run over blocks in order and
// within block l over the (s,t) grid row-major, matching vectorize().
struct WIndex {
  int block = 0;
  int s = 0;
  int t = 0;
};

int mu_index(const SystemSpec& system, int block, int s, int t);
WIndex w_index_of(const SystemSpec& system, int mu);

// The basis element w_mu itself as a model element.
BlockHermitian basis_element(const SystemSpec& system, int mu);

// Transpose sign of w_mu: +1 when s <= t, -1 when s > t.
int gamma_sign(const SystemSpec& system, int mu);

// A pure state: a unit vector confined to one superselection block.
struct PureState {
  SystemSpec system;
  int block = 0;
  Eigen::VectorXcd amplitudes;

  PureState() = default;
  PureState(SystemSpec sys, int blk, Eigen::VectorXcd amps, double unit_tol = 1e-9);

  // Rank-one density matrix in the owning block, zero elsewhere.
  BlockHermitian to_block_hermitian() const;
};

// Probability of an effect on a state, the real block-trace pairing.
double probability(const BlockHermitian& effect, const BlockHermitian& state);

// The deterministic effect, identity on every block; pairs any normalized
// state to 1 and the invariant state to the system rank.
BlockHermitian discard(const SystemSpec& system);

// State-effect duality is the identity on coordinates; the direction tag only
// records which way the map was read.
enum class DaggerDirection { StateToEffect, EffectToState };
BlockHermitian dagger(const BlockHermitian& x, DaggerDirection direction);

// Effect feasibility: 0 <= e <= identity in the PSD order.
bool is_feasible_effect(const BlockHermitian& e, double tol = 1e-9);

// Normalized state: PSD with unit trace.
bool is_density(const BlockHermitian& rho, double tol = 1e-9);

// Measurement: feasible effects summing to the unit effect.
bool is_measurement(const std::vector<BlockHermitian>& effects, double tol = 1e-9);

}  // namespace jordanopt
