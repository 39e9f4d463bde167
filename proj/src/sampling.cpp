#include "jordanopt/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace jordanopt {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  // u1 shifted into (0, 1] so the log never sees zero.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

std::complex<double> Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

int Rng::pick_weighted(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("Rng::pick_weighted: negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("Rng::pick_weighted: zero total weight");
  const double u = uniform() * total;
  double acc = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  return mix(seed + kGolden * (stream + 1));
}

Eigen::VectorXcd random_unit_vector(Rng& rng, int dim) {
  if (dim < 1) throw std::invalid_argument("random_unit_vector: dim must be positive");
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / n;
}

PureState random_pure_state(Rng& rng, const SystemSpec& system) {
  std::vector<double> weights;
  weights.reserve(system.blocks.size());
  for (int d : system.blocks) weights.push_back(static_cast<double>(d));
  const int block = rng.pick_weighted(weights);
  return PureState(system, block, random_unit_vector(rng, system.block_dim(block)));
}

Eigen::MatrixXcd random_hermitian(Rng& rng, int n) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return 0.5 * (g + g.adjoint());
}

Eigen::MatrixXcd random_wishart(Rng& rng, int n, int cols) {
  Eigen::MatrixXcd g(n, cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g * g.adjoint();
}

BlockHermitian random_state(Rng& rng, const SystemSpec& system) {
  BlockHermitian out = BlockHermitian::zero(system);
  for (int l = 0; l < system.block_count(); ++l) {
    const int d = system.block_dim(l);
    out.block(l) = random_wishart(rng, d, d);
  }
  const double t = out.trace();
  return out * (1.0 / t);
}

BlockHermitian random_hermitian_element(Rng& rng, const SystemSpec& system) {
  BlockHermitian out = BlockHermitian::zero(system);
  for (int l = 0; l < system.block_count(); ++l)
    out.block(l) = random_hermitian(rng, system.block_dim(l));
  return out;
}

BlockHermitian random_rank_deficient_state(Rng& rng, const SystemSpec& system) {
  int wide = -1;
  for (int l = 0; l < system.block_count(); ++l)
    if (system.block_dim(l) >= 2) {
      wide = l;
      break;
    }
  if (wide < 0 && system.block_count() < 2)
    throw std::invalid_argument(
        "random_rank_deficient_state: the single-scalar system has no deficient states");

  BlockHermitian out = BlockHermitian::zero(system);
  for (int l = 0; l < system.block_count(); ++l) {
    const int d = system.block_dim(l);
    if (l == wide)
      out.block(l) = random_wishart(rng, d, d - 1);
    else if (wide < 0 && l == system.block_count() - 1)
      out.block(l).setZero();  // all-scalar system: kill the last block
    else
      out.block(l) = random_wishart(rng, d, d);
  }
  const double t = out.trace();
  return out * (1.0 / t);
}

EjaElement random_eja_element(Rng& rng, const EjaKind& kind) {
  if (!kind.has_arithmetic())
    throw std::invalid_argument("random_eja_element: OctHerm3 carries no arithmetic");
  Eigen::VectorXd coords(kind.dim());
  for (long long i = 0; i < kind.dim(); ++i) coords(i) = rng.gaussian();
  return EjaElement::from_coords(kind, coords);
}

}  // namespace jordanopt
