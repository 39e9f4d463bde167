// JSON formats and the command-line shell, exercised in-process through
// cli_run so exit codes are observable without spawning.

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordanopt/cli.hpp"
#include "jordanopt/composite.hpp"
#include "jordanopt/io.hpp"
#include "jordanopt/sampling.hpp"

using namespace jordanopt;

namespace {

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "jordanopt");
  std::vector<char*> argv;
  argv.reserve(args.size());
  for (auto& a : args) argv.push_back(a.data());
  return cli_run(static_cast<int>(argv.size()), argv.data());
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("matrix files round-trip") {
  Rng rng(401);
  const SystemSpec s({1, 2});
  const BlockHermitian m = random_hermitian_element(rng, s);
  const std::string path = temp_path("jordanopt_m1.json");
  save_matrix_file(path, m);
  const BlockHermitian back = load_matrix_file(path);
  CHECK(back.system() == s);
  CHECK(back.max_abs_diff(m) < 1e-12);
  std::filesystem::remove(path);
}

TEST_CASE("matrix_from_json validates symmetry of the parts") {
  // re must be symmetric
  const auto bad_re = nlohmann::json::parse(
      R"({"system": [2], "blocks": [{"re": [[0, 1], [0, 0]], "im": [[0, 0], [0, 0]]}]})");
  CHECK_THROWS_AS(matrix_from_json(bad_re), std::invalid_argument);

  // im must be antisymmetric
  const auto bad_im = nlohmann::json::parse(
      R"({"system": [2], "blocks": [{"re": [[1, 0], [0, 1]], "im": [[0, 1], [1, 0]]}]})");
  CHECK_THROWS_AS(matrix_from_json(bad_im), std::invalid_argument);

  const auto bad_system = nlohmann::json::parse(
      R"({"system": [0], "blocks": [{"re": [[1]], "im": [[0]]}]})");
  CHECK_THROWS_AS(matrix_from_json(bad_system), std::invalid_argument);

  const auto good = nlohmann::json::parse(
      R"({"system": [2], "blocks": [{"re": [[1, 0.5], [0.5, 0]], "im": [[0, -0.25], [0.25, 0]]}]})");
  const BlockHermitian m = matrix_from_json(good);
  CHECK(m.block(0)(0, 1) == std::complex<double>(0.5, -0.25));
}

TEST_CASE("process files round-trip") {
  Rng rng(403);
  const SystemSpec in({2}), out({1, 2});
  const ProcessChoi p = choi_from_kraus(random_tp_process(rng, in, out));
  const std::string path = temp_path("jordanopt_p1.json");
  save_process_file(path, p);
  const ProcessChoi back = load_process_file(path);
  CHECK(back.input == in);
  CHECK(back.output == out);
  CHECK(back.max_abs_diff(p) < 1e-12);
  std::filesystem::remove(path);
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_AS(load_matrix_file(temp_path("jordanopt_nope.json")), std::invalid_argument);
  CHECK_THROWS_AS(load_process_file(temp_path("jordanopt_nope.json")), std::invalid_argument);
}

TEST_CASE("theory spec defaults and lookups") {
  const auto j = nlohmann::json::parse(
      R"({"systems": {"A": [1, 2], "B": [3]}, "tolerance": 1e-8, "seed": 42})");
  const TheorySpec spec = theory_spec_from_json(j);
  CHECK(spec.systems.at("A") == SystemSpec({1, 2}));
  CHECK(spec.systems.at("B") == SystemSpec({3}));
  CHECK(spec.tolerance == doctest::Approx(1e-8));
  CHECK(spec.seed == 42);

  const auto defaults = nlohmann::json::parse(R"({"systems": {"A": [2]}})");
  const TheorySpec d = theory_spec_from_json(defaults);
  CHECK(d.tolerance == doctest::Approx(1e-9));
  CHECK(d.seed == 0);

  const auto bad_tol = nlohmann::json::parse(R"({"systems": {}, "tolerance": -1})");
  CHECK_THROWS_AS(theory_spec_from_json(bad_tol), std::invalid_argument);
}

TEST_CASE("report serialization is schema-stable") {
  VerificationReport rep;
  rep.postulate = Postulate::Filtering;
  rep.system = SystemSpec({1, 2});
  rep.trials = 10;
  rep.max_deviation = 1e-12;
  rep.passed = true;
  rep.witnesses = {"w1"};
  const nlohmann::json j = report_to_json(rep);
  CHECK(j.at("postulate") == "Filtering");
  CHECK(j.at("system") == nlohmann::json::array({1, 2}));
  CHECK(j.at("trials") == 10);
  CHECK(j.at("passed") == true);
  CHECK(j.at("witnesses").size() == 1);
  CHECK(j.contains("max_deviation"));
}

TEST_CASE("cli classify exits 0 on hits and misses alike") {
  CHECK(run_cli({"classify", "--rank", "3", "--dim", "27"}) == 0);
  CHECK(run_cli({"classify", "--rank", "4", "--dim", "9"}) == 0);  // NoMatch is a valid answer
  CHECK(run_cli({"classify", "--rank", "3"}) == 2);                // missing --dim
}

TEST_CASE("cli exclude") {
  CHECK(run_cli({"exclude", "--kind", "RealSym(2)"}) == 0);
  CHECK(run_cli({"exclude", "--kind", "Banana(2)"}) == 2);
}

TEST_CASE("cli rejects unknown subcommands and flags") {
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"classify", "--rank", "3", "--dim", "27", "--what"}) == 2);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("cli verify runs a single postulate") {
  CHECK(run_cli({"verify", "--system", "2", "--postulate", "filtering", "--trials", "10",
                 "--seed", "7"}) == 0);
  CHECK(run_cli({"verify", "--system", "2", "--postulate", "bogus"}) == 2);
  CHECK(run_cli({"verify", "--system", "0,2"}) == 2);
}

TEST_CASE("cli verify resolves labels through a theory file") {
  const std::string path = temp_path("jordanopt_theory.json");
  {
    std::ofstream out(path);
    out << R"({"systems": {"pair": [1, 2]}, "seed": 3})";
  }
  CHECK(run_cli({"verify", "--system", "pair", "--postulate", "complete-mixing", "--trials",
                 "10", "--theory", path}) == 0);
  // without the file the label is unparseable
  CHECK(run_cli({"verify", "--system", "pair", "--trials", "5"}) == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cli spectral and the peel cone guard") {
  const SystemSpec s({2});
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.7;
  m(1, 1) = -0.3;
  const std::string path = temp_path("jordanopt_indef.json");
  save_matrix_file(path, BlockHermitian(s, {m}));

  CHECK(run_cli({"spectral", "--input", path}) == 0);           // eigen mode handles indefinite
  CHECK(run_cli({"spectral", "--input", path, "--peel"}) == 2); // peel demands the cone
  std::filesystem::remove(path);

  CHECK(run_cli({"spectral", "--input", temp_path("jordanopt_nope.json")}) == 2);
}

TEST_CASE("cli choi-roundtrip distinguishes pass, fail, and input error") {
  const SystemSpec s({2});
  const std::string good = temp_path("jordanopt_id.json");
  save_process_file(good, identity_process(s));
  CHECK(run_cli({"choi-roundtrip", "--input", good}) == 0);
  std::filesystem::remove(good);

  // eta as a Choi block is Hermitian but not CP: verification fails, exit 1
  const std::string bad = temp_path("jordanopt_eta.json");
  save_process_file(bad, ProcessChoi(s, s, {eta_element(s).block(0)}));
  CHECK(run_cli({"choi-roundtrip", "--input", bad}) == 1);
  std::filesystem::remove(bad);
}

TEST_CASE("cli tensor and snake and theory-class") {
  CHECK(run_cli({"tensor", "--a", "1,2", "--b", "3"}) == 0);
  CHECK(run_cli({"tensor", "--a", "1,2", "--b", "0"}) == 2);
  CHECK(run_cli({"snake", "--system", "1,2", "--trials", "5"}) == 0);
  CHECK(run_cli({"theory-class", "--system", "1,2", "--trials", "20"}) == 0);
}

TEST_CASE("tolerance comes from the environment unless overridden") {
  setenv("JORDANOPT_TOL", "not-a-number", 1);
  CHECK(run_cli({"snake", "--system", "2", "--trials", "5"}) == 2);
  CHECK(run_cli({"snake", "--system", "2", "--trials", "5", "--tol", "1e-9"}) == 0);
  setenv("JORDANOPT_TOL", "1e-8", 1);
  CHECK(run_cli({"snake", "--system", "2", "--trials", "5"}) == 0);
  unsetenv("JORDANOPT_TOL");
}
