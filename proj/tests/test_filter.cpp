// Filters and projections. The diag(0.5, 1) / diag(0.175, 0.3) constants are
// frozen from tests/oracle/gen_expected.py.

#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "jordanopt/filter.hpp"
#include "jordanopt/process.hpp"
#include "jordanopt/sampling.hpp"

using namespace jordanopt;
using cplx = std::complex<double>;

namespace {

PureState first_axis(const SystemSpec& s, int block) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(s.block_dim(block));
  amps(0) = 1.0;
  return PureState(s, block, amps);
}

}  // namespace

TEST_CASE("qubit filter at c = 0.25") {
  const SystemSpec s({2});
  const Filter f = make_filter(first_axis(s, 0), 0.25);

  // E = sqrt(c) P + (1 - P) = diag(0.5, 1)
  CHECK(f.e.block(0)(0, 0).real() == doctest::Approx(0.5));
  CHECK(f.e.block(0)(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(f.e.block(0)(0, 1)) == doctest::Approx(0.0));

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.3;
  const BlockHermitian out = filter_apply(f, BlockHermitian(s, {rho}));
  CHECK(out.block(0)(0, 0).real() == doctest::Approx(0.175));
  CHECK(out.block(0)(1, 1).real() == doctest::Approx(0.3));

  // the target itself is scaled by c
  const BlockHermitian target_out = filter_apply(f, f.target.to_block_hermitian());
  CHECK(target_out.block(0)(0, 0).real() == doctest::Approx(0.25));
  CHECK(target_out.block(0)(1, 1).real() == doctest::Approx(0.0));
}

TEST_CASE("transmission outside [0, 1] is rejected") {
  const SystemSpec s({2});
  CHECK_THROWS_AS(make_filter(first_axis(s, 0), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_filter(first_axis(s, 0), 1.1), std::invalid_argument);
  CHECK_NOTHROW(make_filter(first_axis(s, 0), 0.0));
  CHECK_NOTHROW(make_filter(first_axis(s, 0), 1.0));
}

TEST_CASE("reverse operator composes to sqrt(c) times the identity") {
  const SystemSpec s({1, 2});
  Rng rng(61);
  const PureState phi = random_pure_state(rng, s);
  const double c = 0.4;
  const Filter f = make_filter(phi, c);

  // blockwise product e_tilde * e
  for (int l = 0; l < s.block_count(); ++l) {
    const Eigen::MatrixXcd prod = f.e_tilde.block(l) * f.e.block(l);
    const Eigen::MatrixXcd want =
        std::sqrt(c) * Eigen::MatrixXcd::Identity(s.block_dim(l), s.block_dim(l));
    CHECK((prod - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("classical filter acts per sector") {
  // oracle: system (1,1), target in the second block, c = 0.3 gives
  // E = (1, sqrt(0.3)) and F(p, q) = (p, c q)
  const SystemSpec s({1, 1});
  const Filter f = make_filter(first_axis(s, 1), 0.3);
  CHECK(f.e.block(0)(0, 0).real() == doctest::Approx(1.0));
  CHECK(f.e.block(1)(0, 0).real() == doctest::Approx(std::sqrt(0.3)));

  Eigen::MatrixXcd p(1, 1), q(1, 1);
  p(0, 0) = 0.6;
  q(0, 0) = 0.4;
  const BlockHermitian out = filter_apply(f, BlockHermitian(s, {p, q}));
  CHECK(out.block(0)(0, 0).real() == doctest::Approx(0.6));
  CHECK(out.block(1)(0, 0).real() == doctest::Approx(0.3 * 0.4));
}

TEST_CASE("the process form matches direct conjugation") {
  const SystemSpec s({1, 2});
  Rng rng(67);
  const PureState phi = random_pure_state(rng, s);
  const Filter f = make_filter(phi, 0.55);
  const ProcessChoi p = filter_to_process(f);

  for (int t = 0; t < 10; ++t) {
    const BlockHermitian rho = random_state(rng, s);
    CHECK(apply(p, rho).max_abs_diff(filter_apply(f, rho)) < 1e-12);
  }
  CHECK(classify_process(p) == ProcessClass::CPTraceNonIncreasing);
}

TEST_CASE("states orthogonal to the target pass unchanged") {
  const SystemSpec s({3});
  Rng rng(71);
  const PureState phi = first_axis(s, 0);
  const Filter f = make_filter(phi, 0.2);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
  rho(1, 1) = 0.5;
  rho(2, 2) = 0.25;
  rho(1, 2) = cplx(0.1, 0.05);
  rho(2, 1) = std::conj(rho(1, 2));
  const BlockHermitian x(s, {rho});
  CHECK(filter_apply(f, x).max_abs_diff(x) < 1e-14);
}

TEST_CASE("the inverse process undoes the filter for c > 0") {
  const SystemSpec s({2});
  Rng rng(73);
  const PureState phi = random_pure_state(rng, s);
  const Filter f = make_filter(phi, 0.5);
  const ProcessChoi round = compose_sequential(filter_inverse(f), filter_to_process(f));
  CHECK(processes_equal(round, identity_process(s), 1e-9));

  const Filter blocked = make_filter(phi, 0.0);
  CHECK_THROWS_AS(filter_inverse(blocked), std::invalid_argument);
}

TEST_CASE("degenerate transmissions") {
  const SystemSpec s({2});
  Rng rng(79);
  const PureState phi = random_pure_state(rng, s);

  // c = 1 is the identity
  CHECK(processes_equal(filter_to_process(make_filter(phi, 1.0)), identity_process(s), 1e-12));

  // c = 0 is the projection onto the complement face
  Pds single(s, {phi});
  const Pds comp = complementary_pds(single);
  CHECK(processes_equal(filter_to_process(make_filter(phi, 0.0)), projection_process(comp),
                        1e-12));
}

TEST_CASE("filter_like_process amplifies when p > 1") {
  const SystemSpec s({2});
  const PureState phi = first_axis(s, 0);
  const ProcessChoi amp = filter_like_process(phi, 4.0);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  const BlockHermitian out = apply(amp, BlockHermitian(s, {rho}));
  CHECK(out.block(0)(0, 0).real() == doctest::Approx(2.0));
  CHECK(out.block(0)(1, 1).real() == doctest::Approx(0.5));

  CHECK_THROWS_AS(filter_like_process(phi, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(filter_like_process(phi, -2.0), std::invalid_argument);
}

TEST_CASE("projection process compresses onto the face") {
  // oracle: projecting diag(a, b) onto {e0} keeps diag(a, 0)
  const SystemSpec s({2});
  Pds face(s, {first_axis(s, 0)});
  const ProcessChoi proj = projection_process(face);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.3;
  const BlockHermitian out = apply(proj, BlockHermitian(s, {rho}));
  CHECK(out.block(0)(0, 0).real() == doctest::Approx(0.7));
  CHECK(out.block(0)(1, 1).real() == doctest::Approx(0.0));
  CHECK(std::abs(out.block(0)(0, 1)) < 1e-15);

  // applying twice changes nothing more
  CHECK(apply(proj, out).max_abs_diff(out) < 1e-14);
}

TEST_CASE("projection process rejects non-distinguishable sets") {
  const SystemSpec s({2});
  Eigen::VectorXcd a(2), b(2);
  a << 1.0, 0.0;
  b << std::sqrt(0.5), std::sqrt(0.5);
  Pds bad(s, {PureState(s, 0, a), PureState(s, 0, b)});
  CHECK_THROWS_AS(projection_process(bad), std::invalid_argument);
}
