#include "jordanopt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace jordanopt {

SpectralState spectral_state(const BlockHermitian& rho) {
  const SystemSpec& sys = rho.system();
  std::vector<double> weights;
  std::vector<PureState> members;
  weights.reserve(static_cast<size_t>(sys.rank()));
  members.reserve(static_cast<size_t>(sys.rank()));

  for (int l = 0; l < sys.block_count(); ++l) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.block(l));
    const int d = sys.block_dim(l);
    // Eigen reports ascending order; emit descending within the block.
    for (int i = d - 1; i >= 0; --i) {
      weights.push_back(es.eigenvalues()(i));
      members.emplace_back(sys, l, es.eigenvectors().col(i).normalized());
    }
  }

  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[static_cast<size_t>(a)] >
                                              weights[static_cast<size_t>(b)]; });

  SpectralState out;
  out.weights.resize(static_cast<Eigen::Index>(order.size()));
  out.frame = Pds(sys);
  for (size_t i = 0; i < order.size(); ++i) {
    out.weights(static_cast<Eigen::Index>(i)) = weights[static_cast<size_t>(order[i])];
    out.frame.members.push_back(members[static_cast<size_t>(order[i])]);
  }
  return out;
}

PeelResult spectral_peel(const BlockHermitian& rho, double cone_tol) {
  if (rho.min_eigenvalue() < -cone_tol)
    throw std::invalid_argument("spectral_peel: element lies outside the cone");

  const SystemSpec& sys = rho.system();
  const int n = sys.rank();
  PeelResult out;
  out.weights.resize(n);
  out.frame = Pds(sys);

  BlockHermitian residual = rho;
  for (int step = 0; step < n; ++step) {
    const Pds complement = complementary_pds(out.frame);

    // Per-block orthonormal bases of the unexplored subspace.
    std::vector<Eigen::MatrixXcd> bases(static_cast<size_t>(sys.block_count()));
    for (const auto& m : complement.members) {
      auto& b = bases[static_cast<size_t>(m.block)];
      b.conservativeResize(sys.block_dim(m.block), b.cols() + 1);
      b.col(b.cols() - 1) = m.amplitudes;
    }

    double best = std::numeric_limits<double>::infinity();
    int best_block = -1;
    Eigen::VectorXcd best_vec;
    for (int l = 0; l < sys.block_count(); ++l) {
      const auto& b = bases[static_cast<size_t>(l)];
      if (b.cols() == 0) continue;
      const Eigen::MatrixXcd compressed = b.adjoint() * residual.block(l) * b;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(compressed);
      if (es.eigenvalues()(0) < best) {
        best = es.eigenvalues()(0);
        best_block = l;
        best_vec = b * es.eigenvectors().col(0);
      }
    }
    if (best_block < 0) throw std::logic_error("spectral_peel: ran out of directions");

    PureState phi(sys, best_block, best_vec.normalized());
    out.weights(step) = best;
    out.frame.members.push_back(phi);
    BlockHermitian term = phi.to_block_hermitian();
    residual = residual - term * best;
  }
  return out;
}

HomogeneityMaps homogeneity_maps(const BlockHermitian& rho, double min_weight) {
  const SpectralState spec = spectral_state(rho);
  if (spec.weights.minCoeff() <= min_weight)
    throw std::invalid_argument("homogeneity_maps: element is not in the cone interior");

  // Block-diagonal sqrt(rho) assembled along the spectral frame; the inverse
  // uses the reciprocal weights on the same frame.
  BlockHermitian fwd = BlockHermitian::zero(rho.system());
  BlockHermitian inv = BlockHermitian::zero(rho.system());
  for (int i = 0; i < spec.weights.size(); ++i) {
    const PureState& m = spec.frame.members[static_cast<size_t>(i)];
    const Eigen::MatrixXcd proj = m.amplitudes * m.amplitudes.adjoint();
    fwd.block(m.block) += std::sqrt(spec.weights(i)) * proj;
    inv.block(m.block) += std::sqrt(1.0 / spec.weights(i)) * proj;
  }

  KrausProcess kf(rho.system(), rho.system());
  KrausProcess ki(rho.system(), rho.system());
  for (int l = 0; l < rho.system().block_count(); ++l) {
    kf.slots(l, l).push_back(fwd.block(l));
    ki.slots(l, l).push_back(inv.block(l));
  }
  return HomogeneityMaps{choi_from_kraus(kf), choi_from_kraus(ki)};
}

}  // namespace jordanopt
