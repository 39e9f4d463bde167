#include "jordanopt/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace jordanopt {

namespace {

// Conjugation by a block-diagonal Hermitian operator as a process.
ProcessChoi conjugation_process(const BlockHermitian& op) {
  const SystemSpec& s = op.system();
  KrausProcess kp(s, s);
  for (int l = 0; l < s.block_count(); ++l) kp.slots(l, l).push_back(op.block(l));
  return choi_from_kraus(kp);
}

}  // namespace

Filter make_filter(const PureState& phi, double c) {
  if (!(c >= 0.0 && c <= 1.0))
    throw std::invalid_argument("make_filter: transmission must lie in [0, 1]");

  Filter f;
  f.target = phi;
  f.c = c;
  const double rc = std::sqrt(c);

  f.e = BlockHermitian::identity(phi.system);
  f.e_tilde = BlockHermitian::identity(phi.system) * rc;
  const Eigen::MatrixXcd proj = phi.amplitudes * phi.amplitudes.adjoint();
  const int d = phi.system.block_dim(phi.block);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  f.e.block(phi.block) = rc * proj + (eye - proj);
  f.e_tilde.block(phi.block) = proj + rc * (eye - proj);
  return f;
}

BlockHermitian filter_apply(const Filter& f, const BlockHermitian& rho) {
  if (rho.system() != f.target.system)
    throw std::invalid_argument("filter_apply: system mismatch");
  BlockHermitian out = BlockHermitian::zero(rho.system());
  for (int l = 0; l < rho.block_count(); ++l)
    out.block(l) = f.e.block(l) * rho.block(l) * f.e.block(l);
  return out;
}

ProcessChoi filter_to_process(const Filter& f) { return conjugation_process(f.e); }

ProcessChoi filter_inverse(const Filter& f) {
  if (f.c <= 0.0)
    throw std::invalid_argument("filter_inverse: filter with c = 0 is not reversible");
  return conjugation_process(f.e_tilde * (1.0 / std::sqrt(f.c)));
}

ProcessChoi filter_like_process(const PureState& phi, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("filter_like_process: scale must be positive");
  BlockHermitian op = BlockHermitian::identity(phi.system);
  const Eigen::MatrixXcd proj = phi.amplitudes * phi.amplitudes.adjoint();
  const int d = phi.system.block_dim(phi.block);
  op.block(phi.block) = std::sqrt(p) * proj + (Eigen::MatrixXcd::Identity(d, d) - proj);
  return conjugation_process(op);
}

ProcessChoi projection_process(const Pds& set) {
  if (pds_status(set) == PdsStatus::NotPds)
    throw std::invalid_argument("projection_process: set is not perfectly distinguishable");
  return conjugation_process(set.chi());
}

}  // namespace jordanopt
