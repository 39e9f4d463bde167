#pragma once

// Spectral decompositions of model elements: the eigensolver route, the
// constructive peel that extracts one pure component per step, and the
// homogeneity maps that carry the unit element onto any interior point.

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/pds.hpp"
#include "jordanopt/process.hpp"

namespace jordanopt {

struct SpectralState {
  // Weights in descending order; ties keep block order, then eigenvector
  // position. For a PSD input these are the convex weights of the state.
  Eigen::VectorXd weights;

  // Maximal distinguishable set aligned with the weights.
  Pds frame;
};

// Per-block eigendecomposition merged into one globally sorted list. Works
// for any Hermitian element; weights may then be negative.
SpectralState spectral_state(const BlockHermitian& rho);

struct PeelResult {
  // Weights in extraction order (smallest compressed eigenvalue first).
  Eigen::VectorXd weights;
  Pds frame;
};

// Constructive decomposition: repeatedly compresses the residual onto the
// complement of the states already extracted, peels off the smallest
// eigenvalue as a pure component, and stops after exactly rank steps.
// Requires a PSD input within cone_tol; throws std::invalid_argument
// otherwise. Small negative peeled weights from roundoff are reported as-is.
PeelResult spectral_peel(const BlockHermitian& rho, double cone_tol = 1e-9);

struct HomogeneityMaps {
  ProcessChoi forward;  // carries the unit element onto rho
  ProcessChoi inverse;  // carries rho back onto the unit element
};

// For a full-rank PSD element rho, conjugation by the block-diagonal square
// root of rho along its spectral frame. The forward and inverse maps compose
// to the identity process. Throws std::invalid_argument when the smallest
// eigenvalue does not clear min_weight.
HomogeneityMaps homogeneity_maps(const BlockHermitian& rho, double min_weight = 1e-9);

}  // namespace jordanopt
