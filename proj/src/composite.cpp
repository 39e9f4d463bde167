#include "jordanopt/composite.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "jordanopt/sampling.hpp"

namespace jordanopt {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SystemSpec tensor_system(const SystemSpec& a, const SystemSpec& b) {
  std::vector<int> dims;
  dims.reserve(a.blocks.size() * b.blocks.size());
  for (int na : a.blocks)
    for (int nb : b.blocks) dims.push_back(na * nb);
  return SystemSpec(std::move(dims));
}

int CompositeIndexMap::block_index(int i, int j) const {
  if (i < 0 || i >= left.block_count() || j < 0 || j >= right.block_count())
    throw std::out_of_range("CompositeIndexMap: factor block out of range");
  return i * right.block_count() + j;
}

std::pair<int, int> CompositeIndexMap::factor_blocks(int flat) const {
  if (flat < 0 || flat >= composite.block_count())
    throw std::out_of_range("CompositeIndexMap: composite block out of range");
  return {flat / right.block_count(), flat % right.block_count()};
}

CompositeIndexMap composite_index_map(const SystemSpec& a, const SystemSpec& b) {
  return CompositeIndexMap{a, b, tensor_system(a, b)};
}

BlockHermitian tensor_element(const BlockHermitian& x, const BlockHermitian& y) {
  const SystemSpec composite = tensor_system(x.system(), y.system());
  BlockHermitian out = BlockHermitian::zero(composite);
  int c = 0;
  for (int i = 0; i < x.block_count(); ++i)
    for (int j = 0; j < y.block_count(); ++j) out.block(c++) = kron(x.block(i), y.block(j));
  return out;
}

PureState tensor_pure(const PureState& x, const PureState& y) {
  const SystemSpec composite = tensor_system(x.system, y.system);
  const int block = x.block * y.system.block_count() + y.block;
  const int nb = static_cast<int>(y.amplitudes.size());
  Eigen::VectorXcd amps(x.amplitudes.size() * nb);
  for (int i = 0; i < x.amplitudes.size(); ++i)
    amps.segment(i * nb, nb) = x.amplitudes(i) * y.amplitudes;
  return PureState(composite, block, std::move(amps));
}

BlockHermitian relabel_blocks(const BlockHermitian& x, const SystemSpec& target) {
  if (x.system().block_count() != target.block_count())
    throw std::invalid_argument("relabel_blocks: block count mismatch");
  for (int l = 0; l < target.block_count(); ++l)
    if (x.system().block_dim(l) != target.block_dim(l))
      throw std::invalid_argument("relabel_blocks: block dimension mismatch");
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(target.block_count()));
  for (int l = 0; l < target.block_count(); ++l) blocks.push_back(x.block(l));
  return BlockHermitian(target, std::move(blocks));
}

BlockHermitian cup_state(const SystemSpec& s) {
  const SystemSpec composite = tensor_system(s, s);
  BlockHermitian out = BlockHermitian::zero(composite);
  for (int mu = 0; mu < s.dim(); ++mu) {
    const BlockHermitian w = basis_element(s, mu);
    const double g = static_cast<double>(gamma_sign(s, mu));
    out = out + tensor_element(w, w) * g;
  }
  return out;
}

BlockHermitian cap_effect(const SystemSpec& s) {
  return dagger(cup_state(s), DaggerDirection::StateToEffect);
}

CupCap cup(const SystemSpec& s) {
  BlockHermitian c = cup_state(s);
  BlockHermitian d = dagger(c, DaggerDirection::StateToEffect);
  return CupCap{s, std::move(c), std::move(d)};
}

BlockHermitian eta_element(const SystemSpec& s) {
  const SystemSpec composite = tensor_system(s, s);
  BlockHermitian out = BlockHermitian::zero(composite);
  for (int mu = 0; mu < s.dim(); ++mu) {
    const BlockHermitian w = basis_element(s, mu);
    out = out + tensor_element(w, w);
  }
  return out;
}

BlockHermitian epsilon_element(const SystemSpec& s) { return eta_element(s); }

BlockHermitian pair_left(const BlockHermitian& e, const BlockHermitian& tau,
                         const SystemSpec& s1, const SystemSpec& s2) {
  if (e.system() != s1) throw std::invalid_argument("pair_left: effect system mismatch");
  if (tau.system() != tensor_system(s1, s2))
    throw std::invalid_argument("pair_left: composite system mismatch");

  BlockHermitian out = BlockHermitian::zero(s2);
  for (int a = 0; a < s1.block_count(); ++a) {
    const int n = s1.block_dim(a);
    const auto& ea = e.block(a);
    for (int b = 0; b < s2.block_count(); ++b) {
      const int m = s2.block_dim(b);
      const auto& t = tau.block(a * s2.block_count() + b);
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
      for (int s = 0; s < n; ++s)
        for (int s2i = 0; s2i < n; ++s2i) {
          const std::complex<double> c = ea(s, s2i);
          if (c == std::complex<double>(0.0, 0.0)) continue;
          acc += c * t.block(s2i * m, s * m, m, m);
        }
      out.block(b) += acc;
    }
  }
  return out;
}

BlockHermitian pair_right(const BlockHermitian& tau, const BlockHermitian& e,
                          const SystemSpec& s1, const SystemSpec& s2) {
  if (e.system() != s2) throw std::invalid_argument("pair_right: effect system mismatch");
  if (tau.system() != tensor_system(s1, s2))
    throw std::invalid_argument("pair_right: composite system mismatch");

  BlockHermitian out = BlockHermitian::zero(s1);
  for (int a = 0; a < s1.block_count(); ++a) {
    const int n = s1.block_dim(a);
    for (int b = 0; b < s2.block_count(); ++b) {
      const int m = s2.block_dim(b);
      const auto& eb = e.block(b);
      const auto& t = tau.block(a * s2.block_count() + b);
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
      for (int s = 0; s < n; ++s)
        for (int s2i = 0; s2i < n; ++s2i) {
          std::complex<double> v(0.0, 0.0);
          for (int u = 0; u < m; ++u)
            for (int u2 = 0; u2 < m; ++u2) v += eb(u, u2) * t(s * m + u2, s2i * m + u);
          acc(s, s2i) = v;
        }
      out.block(a) += acc;
    }
  }
  return out;
}

namespace {

double one_sided_snake(const SystemSpec& s, const BlockHermitian& rho,
                       const BlockHermitian& cup_like, const BlockHermitian& cap_like) {
  const SystemSpec ss = tensor_system(s, s);

  // rho ox cup on S ox (S ox S), regrouped to (S ox S) ox S, then the cap
  // consumes the first two factors.
  BlockHermitian t1 = tensor_element(rho, cup_like);
  t1 = relabel_blocks(t1, tensor_system(ss, s));
  const BlockHermitian left = pair_left(cap_like, t1, ss, s);
  const double d1 = left.frobenius_distance(rho);

  // Mirror: cup ox rho on (S ox S) ox S, regrouped to S ox (S ox S), then
  // the cap consumes the last two factors.
  BlockHermitian t2 = tensor_element(cup_like, rho);
  t2 = relabel_blocks(t2, tensor_system(s, ss));
  const BlockHermitian right = pair_right(t2, cap_like, s, ss);
  const double d2 = right.frobenius_distance(rho);

  return std::max(d1, d2);
}

}  // namespace

double snake_defect(const SystemSpec& s, const BlockHermitian& rho) {
  return one_sided_snake(s, rho, cup_state(s), cap_effect(s));
}

double eta_defect(const SystemSpec& s, const BlockHermitian& rho) {
  return one_sided_snake(s, rho, eta_element(s), epsilon_element(s));
}

double snake_check(const SystemSpec& s) {
  const BlockHermitian unit = BlockHermitian::identity(s);
  double worst = snake_defect(s, unit);
  const int d = static_cast<int>(s.dim());
  // w_mu + unit is PSD for every basis element, so the sweep stays on states
  // while still spanning the whole space together with the unit.
  for (int mu = 0; mu < d; ++mu)
    worst = std::max(worst, snake_defect(s, basis_element(s, mu) + unit));
  return worst;
}

double eta_epsilon_check(const SystemSpec& s) {
  const BlockHermitian unit = BlockHermitian::identity(s);
  double worst = eta_defect(s, unit);
  const int d = static_cast<int>(s.dim());
  for (int mu = 0; mu < d; ++mu) worst = std::max(worst, eta_defect(s, basis_element(s, mu)));
  return worst;
}

int local_tomography_rank(const SystemSpec& a, const SystemSpec& b, std::uint64_t seed,
                          int samples, double threshold) {
  const long long dab = tensor_system(a, b).dim();
  if (samples <= 0) samples = static_cast<int>(dab) + 8;
  Rng rng(seed);
  Eigen::MatrixXd rows(samples, dab);
  for (int i = 0; i < samples; ++i) {
    const BlockHermitian sa = random_state(rng, a);
    const BlockHermitian sb = random_state(rng, b);
    rows.row(i) = tensor_element(sa, sb).vectorize().transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold * sv(0)) ++rank;
  return rank;
}

bool local_tomography_span(const SystemSpec& a, const SystemSpec& b, std::uint64_t seed) {
  return local_tomography_rank(a, b, seed) == tensor_system(a, b).dim();
}

Pds composite_mpds(const Pds& a, const Pds& b) {
  Pds out(tensor_system(a.system, b.system));
  out.members.reserve(a.members.size() * b.members.size());
  for (const auto& x : a.members)
    for (const auto& y : b.members) out.members.push_back(tensor_pure(x, y));
  return out;
}

}  // namespace jordanopt
