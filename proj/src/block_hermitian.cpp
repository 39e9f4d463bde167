#include "jordanopt/block_hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jordanopt {

BlockHermitian::BlockHermitian(SystemSpec system, std::vector<Eigen::MatrixXcd> blocks,
                               double hermiticity_tol)
    : system_(std::move(system)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != system_.block_count())
    throw std::invalid_argument("BlockHermitian: block count does not match system");
  for (int l = 0; l < system_.block_count(); ++l) {
    const auto& m = blocks_[static_cast<size_t>(l)];
    const int d = system_.block_dim(l);
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("BlockHermitian: block size does not match system");
  }
  if (hermiticity_defect() > hermiticity_tol)
    throw std::invalid_argument("BlockHermitian: block is not Hermitian within tolerance");
}

BlockHermitian BlockHermitian::zero(const SystemSpec& system) {
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(system.block_count()));
  for (int d : system.blocks) blocks.push_back(Eigen::MatrixXcd::Zero(d, d));
  return BlockHermitian(system, std::move(blocks));
}

BlockHermitian BlockHermitian::identity(const SystemSpec& system) {
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(system.block_count()));
  for (int d : system.blocks) blocks.push_back(Eigen::MatrixXcd::Identity(d, d));
  return BlockHermitian(system, std::move(blocks));
}

namespace {

void require_same_system(const BlockHermitian& a, const BlockHermitian& b, const char* op) {
  if (a.system() != b.system())
    throw std::invalid_argument(std::string(op) + ": system mismatch");
}

}  // namespace

BlockHermitian BlockHermitian::operator+(const BlockHermitian& o) const {
  require_same_system(*this, o, "BlockHermitian::operator+");
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(blocks_.size());
  for (size_t l = 0; l < blocks_.size(); ++l) out.push_back(blocks_[l] + o.blocks_[l]);
  // Sums of Hermitian blocks stay Hermitian; skip the constructor check by
  // copying the already validated system.
  BlockHermitian r;
  r.system_ = system_;
  r.blocks_ = std::move(out);
  return r;
}

BlockHermitian BlockHermitian::operator-(const BlockHermitian& o) const {
  require_same_system(*this, o, "BlockHermitian::operator-");
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(blocks_.size());
  for (size_t l = 0; l < blocks_.size(); ++l) out.push_back(blocks_[l] - o.blocks_[l]);
  BlockHermitian r;
  r.system_ = system_;
  r.blocks_ = std::move(out);
  return r;
}

BlockHermitian BlockHermitian::operator*(double s) const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(blocks_.size());
  for (const auto& m : blocks_) out.push_back(m * s);
  BlockHermitian r;
  r.system_ = system_;
  r.blocks_ = std::move(out);
  return r;
}

double BlockHermitian::trace() const {
  double t = 0.0;
  for (const auto& m : blocks_) t += m.trace().real();
  return t;
}

double BlockHermitian::inner(const BlockHermitian& o) const {
  require_same_system(*this, o, "BlockHermitian::inner");
  double t = 0.0;
  for (size_t l = 0; l < blocks_.size(); ++l)
    t += (blocks_[l] * o.blocks_[l]).trace().real();
  return t;
}

double BlockHermitian::frobenius_norm() const {
  double s = 0.0;
  for (const auto& m : blocks_) s += m.squaredNorm();
  return std::sqrt(s);
}

double BlockHermitian::frobenius_distance(const BlockHermitian& o) const {
  require_same_system(*this, o, "BlockHermitian::frobenius_distance");
  double s = 0.0;
  for (size_t l = 0; l < blocks_.size(); ++l) s += (blocks_[l] - o.blocks_[l]).squaredNorm();
  return std::sqrt(s);
}

double BlockHermitian::max_abs_diff(const BlockHermitian& o) const {
  require_same_system(*this, o, "BlockHermitian::max_abs_diff");
  double m = 0.0;
  for (size_t l = 0; l < blocks_.size(); ++l)
    m = std::max(m, (blocks_[l] - o.blocks_[l]).cwiseAbs().maxCoeff());
  return m;
}

double BlockHermitian::min_eigenvalue() const {
  double mn = std::numeric_limits<double>::infinity();
  for (const auto& m : blocks_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    mn = std::min(mn, es.eigenvalues().minCoeff());
  }
  return mn;
}

double BlockHermitian::hermiticity_defect() const {
  double d = 0.0;
  for (const auto& m : blocks_)
    d = std::max(d, (m - m.adjoint()).cwiseAbs().maxCoeff());
  return d;
}

Eigen::VectorXd BlockHermitian::vectorize() const {
  const double rt2 = std::sqrt(2.0);
  Eigen::VectorXd c(system_.dim());
  int idx = 0;
  for (int l = 0; l < block_count(); ++l) {
    const auto& m = blocks_[static_cast<size_t>(l)];
    const int n = system_.block_dim(l);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t)
          c(idx++) = m(s, s).real();
        else if (s < t)
          c(idx++) = rt2 * m(s, t).real();
        else
          c(idx++) = rt2 * m(s, t).imag();
      }
  }
  return c;
}

BlockHermitian BlockHermitian::from_vector(const SystemSpec& system,
                                           const Eigen::VectorXd& coords) {
  if (coords.size() != system.dim())
    throw std::invalid_argument("BlockHermitian::from_vector: coordinate length mismatch");
  const double irt2 = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(system.block_count()));
  int idx = 0;
  for (int d : system.blocks) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) {
        const double v = coords(idx++);
        if (s == t)
          m(s, s) += v;
        else if (s < t) {
          m(s, t) += std::complex<double>(irt2 * v, 0.0);
          m(t, s) += std::complex<double>(irt2 * v, 0.0);
        } else {
          m(s, t) += std::complex<double>(0.0, irt2 * v);
          m(t, s) += std::complex<double>(0.0, -irt2 * v);
        }
      }
    blocks.push_back(std::move(m));
  }
  return BlockHermitian(system, std::move(blocks));
}

// =============================================================================
// Canonical basis bookkeeping
// =============================================================================

int mu_index(const SystemSpec& system, int block, int s, int t) {
  if (block < 0 || block >= system.block_count())
    throw std::invalid_argument("mu_index: block out of range");
  const int n = system.block_dim(block);
  if (s < 0 || s >= n || t < 0 || t >= n)
    throw std::invalid_argument("mu_index: matrix indices out of range");
  int off = 0;
  for (int l = 0; l < block; ++l) off += system.block_dim(l) * system.block_dim(l);
  return off + s * n + t;
}

WIndex w_index_of(const SystemSpec& system, int mu) {
  if (mu < 0 || mu >= system.dim()) throw std::invalid_argument("w_index_of: index out of range");
  int off = 0;
  for (int l = 0; l < system.block_count(); ++l) {
    const int n = system.block_dim(l);
    if (mu < off + n * n) {
      const int local = mu - off;
      return WIndex{l, local / n, local % n};
    }
    off += n * n;
  }
  throw std::logic_error("w_index_of: unreachable");
}

BlockHermitian basis_element(const SystemSpec& system, int mu) {
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(system.dim());
  coords(mu) = 1.0;
  return BlockHermitian::from_vector(system, coords);
}

int gamma_sign(const SystemSpec& system, int mu) {
  const WIndex w = w_index_of(system, mu);
  return (w.s <= w.t) ? 1 : -1;
}

// =============================================================================
// Pure states and pairing
// =============================================================================

PureState::PureState(SystemSpec sys, int blk, Eigen::VectorXcd amps, double unit_tol)
    : system(std::move(sys)), block(blk), amplitudes(std::move(amps)) {
  if (block < 0 || block >= system.block_count())
    throw std::invalid_argument("PureState: block out of range");
  if (amplitudes.size() != system.block_dim(block))
    throw std::invalid_argument("PureState: amplitude length does not match block");
  if (std::abs(amplitudes.norm() - 1.0) > unit_tol)
    throw std::invalid_argument("PureState: amplitudes must be a unit vector");
}

BlockHermitian PureState::to_block_hermitian() const {
  BlockHermitian out = BlockHermitian::zero(system);
  out.block(block) = amplitudes * amplitudes.adjoint();
  return out;
}

double probability(const BlockHermitian& effect, const BlockHermitian& state) {
  return effect.inner(state);
}

BlockHermitian discard(const SystemSpec& system) { return BlockHermitian::identity(system); }

BlockHermitian dagger(const BlockHermitian& x, DaggerDirection) {
  return x;  // duality is the identity on canonical coordinates
}

bool is_feasible_effect(const BlockHermitian& e, double tol) {
  if (!e.is_psd(tol)) return false;
  return (BlockHermitian::identity(e.system()) - e).is_psd(tol);
}

bool is_density(const BlockHermitian& rho, double tol) {
  return rho.is_psd(tol) && std::abs(rho.trace() - 1.0) <= tol;
}

bool is_measurement(const std::vector<BlockHermitian>& effects, double tol) {
  if (effects.empty()) return false;
  BlockHermitian sum = BlockHermitian::zero(effects.front().system());
  for (const auto& e : effects) {
    if (!is_feasible_effect(e, tol)) return false;
    sum = sum + e;
  }
  return sum.max_abs_diff(BlockHermitian::identity(sum.system())) <= tol;
}

}  // namespace jordanopt
