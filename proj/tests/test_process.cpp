// Choi calculus: round trips, classification, composition, and the
// interchange law. Frozen Choi matrices come from tests/oracle/gen_expected.py.

#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "jordanopt/composite.hpp"
#include "jordanopt/process.hpp"
#include "jordanopt/sampling.hpp"

using namespace jordanopt;
using cplx = std::complex<double>;

TEST_CASE("identity Choi block equals the cup") {
  const SystemSpec s({2});
  const ProcessChoi id = identity_process(s);
  Eigen::MatrixXcd want(4, 4);
  want << 1, 0, 0, 1,
          0, 0, 0, 0,
          0, 0, 0, 0,
          1, 0, 0, 1;
  CHECK((id.block(0, 0) - want).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((id.block(0, 0) - cup_state(s).block(0)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(classify_process(id) == ProcessClass::CPTP);
}

TEST_CASE("dephasing Choi is the frozen diagonal") {
  const SystemSpec s({2});
  KrausProcess kp(s, s);
  Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(2, 2);
  k0(0, 0) = 1.0;
  k1(1, 1) = 1.0;
  kp.slots(0, 0) = {k0, k1};

  const ProcessChoi p = choi_from_kraus(kp);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want(0, 0) = 1.0;
  want(3, 3) = 1.0;
  CHECK((p.block(0, 0) - want).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(classify_process(p) == ProcessClass::CPTP);
}

TEST_CASE("kvec ties Kraus and Choi index orders together") {
  Eigen::MatrixXcd k(2, 3);  // 3-dim input, 2-dim output
  int v = 0;
  for (int a = 0; a < 2; ++a)
    for (int al = 0; al < 3; ++al) k(a, al) = cplx(++v, 0);
  const Eigen::VectorXcd kv = kvec(k);
  REQUIRE(kv.size() == 6);
  // input-major: slot alpha * n_out + a holds K(a, alpha)
  for (int al = 0; al < 3; ++al)
    for (int a = 0; a < 2; ++a) CHECK(kv(al * 2 + a) == k(a, al));
}

TEST_CASE("choi apply matches the Kraus action") {
  Rng rng(301);
  const SystemSpec in({1, 2}), out({2, 1});
  const KrausProcess kp = random_cp_process(rng, in, out);
  const ProcessChoi p = choi_from_kraus(kp);
  for (int t = 0; t < 10; ++t) {
    const BlockHermitian rho = random_state(rng, in);
    CHECK(apply(p, rho).max_abs_diff(apply(kp, rho)) < 1e-12);
  }
}

TEST_CASE("Choi to Kraus and back is the identity on CP processes") {
  Rng rng(303);
  for (const auto& pair : {std::pair<SystemSpec, SystemSpec>{SystemSpec({2}), SystemSpec({2})},
                           {SystemSpec({1, 2}), SystemSpec({3})},
                           {SystemSpec({2, 2}), SystemSpec({1, 2})}}) {
    for (int t = 0; t < 5; ++t) {
      const ProcessChoi p = choi_from_kraus(random_cp_process(rng, pair.first, pair.second));
      const ProcessChoi back = choi_from_kraus(kraus_from_choi(p));
      CHECK(p.max_abs_diff(back) < 1e-9);
    }
  }
}

TEST_CASE("kraus_from_choi rejects non-CP input") {
  const SystemSpec s({2});
  // the eta element has a negative eigenvalue
  ProcessChoi bad(s, s, {eta_element(s).block(0)});
  CHECK(bad.min_eigenvalue() < -0.5);
  CHECK(classify_process(bad) == ProcessClass::NotCP);
  CHECK_THROWS_AS(kraus_from_choi(bad), std::invalid_argument);
}

TEST_CASE("trace preservation is the partial-trace identity") {
  Rng rng(307);
  const SystemSpec in({1, 2}), out({2});
  const KrausProcess kp = random_tp_process(rng, in, out);
  const ProcessChoi p = choi_from_kraus(kp);
  CHECK(classify_process(p) == ProcessClass::CPTP);

  const std::vector<Eigen::MatrixXcd> traces = input_partial_traces(p);
  REQUIRE(traces.size() == 2);
  for (int i = 0; i < 2; ++i) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(in.block_dim(i), in.block_dim(i));
    CHECK((traces[static_cast<size_t>(i)] - id).cwiseAbs().maxCoeff() < 1e-10);
  }

  // trace preservation on states follows
  for (int t = 0; t < 5; ++t) {
    const BlockHermitian rho = random_state(rng, in);
    CHECK(apply(p, rho).trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("classification thresholds") {
  const SystemSpec s({2});
  const ProcessChoi id = identity_process(s);
  CHECK(classify_process(id) == ProcessClass::CPTP);

  ProcessChoi shrunk = id;
  shrunk.block(0, 0) *= 0.5;
  CHECK(classify_process(shrunk) == ProcessClass::CPTraceNonIncreasing);

  ProcessChoi grown = id;
  grown.block(0, 0) *= 1.5;
  CHECK(classify_process(grown) == ProcessClass::CPTraceIncreasing);

  CHECK(classify_process(zero_process(s, s)) == ProcessClass::CPTraceNonIncreasing);
}

TEST_CASE("complete_to_test restores trace preservation") {
  Rng rng(311);
  const SystemSpec s({1, 2});
  const PureState phi = random_pure_state(rng, s);

  KrausProcess half(s, s);
  for (int l = 0; l < s.block_count(); ++l) {
    const int n = s.block_dim(l);
    half.slots(l, l) = {Eigen::MatrixXcd(std::sqrt(0.5) *
                                         Eigen::MatrixXcd::Identity(n, n))};
  }
  const ProcessChoi p = choi_from_kraus(half);
  REQUIRE(classify_process(p) == ProcessClass::CPTraceNonIncreasing);

  const ProcessChoi rest = complete_to_test(p);
  CHECK(classify_process(rest) == ProcessClass::CPTraceNonIncreasing);
  for (int t = 0; t < 5; ++t) {
    const BlockHermitian rho = random_state(rng, s);
    const double total = apply(p, rho).trace() + apply(rest, rho).trace();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }

  // a trace-increasing process admits no completion
  ProcessChoi grown = identity_process(s);
  grown.block(0, 0) *= 2.0;
  CHECK_THROWS_AS(complete_to_test(grown), std::invalid_argument);
}

TEST_CASE("swap exchanges the factors") {
  Rng rng(313);
  const SystemSpec a({2}), b({1, 2});
  const ProcessChoi sw = swap_process(a, b);
  CHECK(classify_process(sw) == ProcessClass::CPTP);

  const BlockHermitian rho = random_state(rng, a);
  const BlockHermitian sig = random_state(rng, b);
  const BlockHermitian swapped = apply(sw, tensor_element(rho, sig));
  CHECK(swapped.max_abs_diff(tensor_element(sig, rho)) < 1e-12);
}

TEST_CASE("sequential composition matches Kraus products") {
  Rng rng(317);
  const SystemSpec a({2}), b({1, 2}), c({2});
  const KrausProcess kf = random_cp_process(rng, a, b);
  const KrausProcess kg = random_cp_process(rng, b, c);

  // direct Kraus products over the middle system
  KrausProcess kgf(a, c);
  for (int i = 0; i < a.block_count(); ++i)
    for (int k = 0; k < c.block_count(); ++k)
      for (int j = 0; j < b.block_count(); ++j)
        for (const auto& kg_op : kg.slots(j, k))
          for (const auto& kf_op : kf.slots(i, j))
            kgf.slots(i, k).push_back(kg_op * kf_op);

  const ProcessChoi composed =
      compose_sequential(choi_from_kraus(kg), choi_from_kraus(kf));
  CHECK(composed.max_abs_diff(choi_from_kraus(kgf)) < 1e-10);

  // identity is neutral on both sides
  const ProcessChoi pf = choi_from_kraus(kf);
  CHECK(processes_equal(compose_sequential(identity_process(b), pf), pf, 1e-10));
  CHECK(processes_equal(compose_sequential(pf, identity_process(a)), pf, 1e-10));
}

TEST_CASE("sequential composition is associative") {
  Rng rng(319);
  const SystemSpec a({2}), b({3}), c({1, 2}), d({2});
  const ProcessChoi f = choi_from_kraus(random_tp_process(rng, a, b));
  const ProcessChoi g = choi_from_kraus(random_tp_process(rng, b, c));
  const ProcessChoi h = choi_from_kraus(random_tp_process(rng, c, d));
  const ProcessChoi left = compose_sequential(h, compose_sequential(g, f));
  const ProcessChoi right = compose_sequential(compose_sequential(h, g), f);
  CHECK(left.max_abs_diff(right) < 1e-10);
}

TEST_CASE("parallel composition acts factor-wise on products") {
  Rng rng(323);
  const SystemSpec a({2}), b({1, 2}), c({2}), d({2});
  const ProcessChoi f = choi_from_kraus(random_tp_process(rng, a, c));
  const ProcessChoi g = choi_from_kraus(random_tp_process(rng, b, d));
  const ProcessChoi fg = compose_parallel(f, g);
  CHECK(classify_process(fg) == ProcessClass::CPTP);

  for (int t = 0; t < 5; ++t) {
    const BlockHermitian rho = random_state(rng, a);
    const BlockHermitian sig = random_state(rng, b);
    const BlockHermitian got = apply(fg, tensor_element(rho, sig));
    const BlockHermitian want = tensor_element(apply(f, rho), apply(g, sig));
    CHECK(got.max_abs_diff(want) < 1e-11);
  }
}

TEST_CASE("interchange of parallel and sequential composition") {
  Rng rng(327);
  const SystemSpec a({2}), b({1, 2});
  const ProcessChoi f1 = choi_from_kraus(random_tp_process(rng, a, a));
  const ProcessChoi f2 = choi_from_kraus(random_tp_process(rng, a, a));
  const ProcessChoi g1 = choi_from_kraus(random_tp_process(rng, b, b));
  const ProcessChoi g2 = choi_from_kraus(random_tp_process(rng, b, b));

  const ProcessChoi lhs = compose_parallel(compose_sequential(f2, f1),
                                            compose_sequential(g2, g1));
  const ProcessChoi rhs = compose_sequential(compose_parallel(f2, g2),
                                              compose_parallel(f1, g1));
  CHECK(lhs.max_abs_diff(rhs) < 1e-10);
}

TEST_CASE("process equality and local equality") {
  Rng rng(331);
  const SystemSpec s({1, 2});
  const ProcessChoi f = choi_from_kraus(random_tp_process(rng, s, s));
  ProcessChoi g = f;
  CHECK(processes_equal(f, g));
  CHECK(locally_equal(f, g, SystemSpec({2}), 8, 99));

  g.block(0, 0)(0, 0) += 1e-3;
  CHECK_FALSE(processes_equal(f, g));
  CHECK_FALSE(locally_equal(f, g, SystemSpec({1}), 8, 99));
}

TEST_CASE("random processes land in their advertised class") {
  Rng rng(337);
  const SystemSpec in({2, 2}), out({1, 2});
  for (int t = 0; t < 5; ++t) {
    const ProcessChoi tp = choi_from_kraus(random_tp_process(rng, in, out));
    CHECK(classify_process(tp) == ProcessClass::CPTP);
    const ProcessChoi cp = choi_from_kraus(random_cp_process(rng, in, out));
    CHECK(cp.min_eigenvalue() > -1e-10);
  }
}

TEST_CASE("choi constructor validates shapes") {
  const SystemSpec s({2});
  CHECK_THROWS_AS(ProcessChoi(s, s, {Eigen::MatrixXcd::Zero(3, 3).eval()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProcessChoi(s, s, {}), std::invalid_argument);
  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(4, 4);
  skew(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(ProcessChoi(s, s, {skew}), std::invalid_argument);
}
