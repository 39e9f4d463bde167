#include "jordanopt/pds.hpp"

#include <cmath>
#include <stdexcept>

namespace jordanopt {

Pds::Pds(SystemSpec sys, std::vector<PureState> mem)
    : system(std::move(sys)), members(std::move(mem)) {
  for (const auto& m : members)
    if (m.system != system) throw std::invalid_argument("Pds: member system mismatch");
}

BlockHermitian Pds::chi() const {
  BlockHermitian out = BlockHermitian::zero(system);
  for (const auto& m : members)
    out.block(m.block) += m.amplitudes * m.amplitudes.adjoint();
  return out;
}

PdsStatus pds_status(const Pds& set, double tol) {
  for (const auto& m : set.members)
    if (m.system != set.system) return PdsStatus::NotPds;
  for (size_t i = 0; i < set.members.size(); ++i)
    for (size_t j = i + 1; j < set.members.size(); ++j) {
      const auto& a = set.members[i];
      const auto& b = set.members[j];
      if (a.block != b.block) continue;
      if (std::abs(a.amplitudes.dot(b.amplitudes)) > tol) return PdsStatus::NotPds;
    }
  return (set.size() == set.system.rank()) ? PdsStatus::Mpds : PdsStatus::Pds;
}

Pds complementary_pds(const Pds& set, double tol) {
  if (pds_status(set, tol) == PdsStatus::NotPds)
    throw std::invalid_argument("complementary_pds: input is not perfectly distinguishable");

  const BlockHermitian chi = set.chi();
  Pds out(set.system);
  for (int l = 0; l < set.system.block_count(); ++l) {
    const int d = set.system.block_dim(l);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Identity(d, d) - chi.block(l);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(comp);
    // chi restricted to a block is a projector, so eigenvalues cluster at 0
    // and 1; anything past 1/2 belongs to the complement.
    for (int i = 0; i < d; ++i) {
      if (es.eigenvalues()(i) < 0.5) continue;
      Eigen::VectorXcd v = es.eigenvectors().col(i);
      out.members.emplace_back(set.system, l, v.normalized());
    }
  }
  return out;
}

FaceKernelStatus face_kernel_membership(const BlockHermitian& rho, const Pds& set, double tol) {
  if (rho.system() != set.system)
    throw std::invalid_argument("face_kernel_membership: system mismatch");
  const double captured = probability(set.chi(), rho);
  const double total = rho.trace();
  const bool in_face = std::abs(captured - total) <= tol;
  const bool in_kernel = std::abs(captured) <= tol;
  if (in_face && in_kernel) return FaceKernelStatus::Both;
  if (in_face) return FaceKernelStatus::InFace;
  if (in_kernel) return FaceKernelStatus::InKernel;
  return FaceKernelStatus::Neither;
}

}  // namespace jordanopt
