#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "jordanopt/pds.hpp"
#include "jordanopt/sampling.hpp"

using namespace jordanopt;
using cplx = std::complex<double>;

namespace {

PureState axis_state(const SystemSpec& s, int block, int index) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(s.block_dim(block));
  amps(index) = 1.0;
  return PureState(s, block, amps);
}

}  // namespace

TEST_CASE("orthogonality decides the status") {
  const SystemSpec s({1, 2});

  Pds empty(s);
  CHECK(pds_status(empty) == PdsStatus::Pds);

  Pds axes(s, {axis_state(s, 0, 0), axis_state(s, 1, 0)});
  CHECK(pds_status(axes) == PdsStatus::Pds);

  Pds full(s, {axis_state(s, 0, 0), axis_state(s, 1, 0), axis_state(s, 1, 1)});
  CHECK(pds_status(full) == PdsStatus::Mpds);

  // overlapping members in the same block
  Eigen::VectorXcd diag(2);
  diag << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Pds bad(s, {axis_state(s, 1, 0), PureState(s, 1, diag)});
  CHECK(pds_status(bad) == PdsStatus::NotPds);
}

TEST_CASE("members in different blocks never overlap") {
  const SystemSpec s({2, 2});
  Eigen::VectorXcd v(2);
  v << 0.6, 0.8;
  Pds p(s, {PureState(s, 0, v), PureState(s, 1, v)});
  CHECK(pds_status(p) == PdsStatus::Pds);
}

TEST_CASE("chi of a maximal set is the unit effect") {
  const SystemSpec s({1, 3});
  Rng rng(15);
  // random orthonormal triple in the 3-block via a Wishart eigenbasis
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(random_wishart(rng, 3, 3));
  std::vector<PureState> members = {axis_state(s, 0, 0)};
  for (int i = 0; i < 3; ++i)
    members.emplace_back(s, 1, Eigen::VectorXcd(es.eigenvectors().col(i)));
  Pds full(s, members);
  REQUIRE(pds_status(full) == PdsStatus::Mpds);
  CHECK(full.chi().max_abs_diff(BlockHermitian::identity(s)) < 1e-12);
}

TEST_CASE("complement completes to a maximal set") {
  const SystemSpec s({1, 3});
  Rng rng(19);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(random_wishart(rng, 3, 3));
  Pds partial(s, {PureState(s, 1, Eigen::VectorXcd(es.eigenvectors().col(0)))});

  const Pds comp = complementary_pds(partial);
  CHECK(comp.size() == s.rank() - partial.size());

  Pds joined = partial;
  for (const auto& m : comp.members) joined.members.push_back(m);
  CHECK(pds_status(joined) == PdsStatus::Mpds);
  CHECK(joined.chi().max_abs_diff(BlockHermitian::identity(s)) < 1e-10);

  // complement of a maximal set is empty
  CHECK(complementary_pds(joined).size() == 0);
}

TEST_CASE("complement of the empty set is maximal") {
  const SystemSpec s({2, 2});
  const Pds comp = complementary_pds(Pds(s));
  CHECK(comp.size() == s.rank());
  CHECK(pds_status(comp) == PdsStatus::Mpds);
}

TEST_CASE("complement rejects non-distinguishable input") {
  const SystemSpec s({2});
  Eigen::VectorXcd a(2), b(2);
  a << 1.0, 0.0;
  b << std::sqrt(0.5), std::sqrt(0.5);
  Pds bad(s, {PureState(s, 0, a), PureState(s, 0, b)});
  CHECK_THROWS_AS(complementary_pds(bad), std::invalid_argument);
}

TEST_CASE("face and kernel location") {
  const SystemSpec s({2});
  Pds face(s, {axis_state(s, 0, 0)});

  Eigen::MatrixXcd in_face = Eigen::MatrixXcd::Zero(2, 2);
  in_face(0, 0) = 0.7;
  CHECK(face_kernel_membership(BlockHermitian(s, {in_face}), face) == FaceKernelStatus::InFace);

  Eigen::MatrixXcd in_kernel = Eigen::MatrixXcd::Zero(2, 2);
  in_kernel(1, 1) = 0.4;
  CHECK(face_kernel_membership(BlockHermitian(s, {in_kernel}), face) == FaceKernelStatus::InKernel);

  Eigen::MatrixXcd both = in_face + in_kernel;
  CHECK(face_kernel_membership(BlockHermitian(s, {both}), face) == FaceKernelStatus::Neither);

  CHECK(face_kernel_membership(BlockHermitian::zero(s), face) == FaceKernelStatus::Both);
}
