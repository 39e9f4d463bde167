#include "jordanopt/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "jordanopt/classification.hpp"
#include "jordanopt/composite.hpp"
#include "jordanopt/io.hpp"
#include "jordanopt/process.hpp"
#include "jordanopt/sampling.hpp"
#include "jordanopt/spectral.hpp"
#include "jordanopt/verify.hpp"

namespace jordanopt {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

std::string kind_name_or_nomatch(const std::optional<EjaKind>& k) {
  return k ? format_kind(*k) : "NoMatch";
}

void print_report_text(const VerificationReport& rep) {
  std::cout << postulate_name(rep.postulate) << " on (" << rep.system.to_string()
            << "): " << (rep.passed ? "passed" : "FAILED") << " (" << rep.trials
            << " trials, max deviation " << rep.max_deviation << ")\n";
  for (const auto& w : rep.witnesses) std::cout << "  witness: " << w << "\n";
}

struct VerifyArgs {
  std::string system;
  std::string postulate;
  std::string theory_file;
  int trials = 200;
  std::uint64_t seed = 0;
};

// Resolves --system against an optional theory file: a label defined there
// wins, otherwise the string parses as a block-dimension list.
SystemSpec resolve_system(const std::string& text, const std::string& theory_file,
                          double& tol, std::uint64_t& seed, bool tol_given, bool seed_given) {
  if (theory_file.empty()) return SystemSpec::parse(text);
  const TheorySpec spec = load_theory_spec(theory_file);
  if (!tol_given) tol = spec.tolerance;
  if (!seed_given) seed = spec.seed;
  const auto it = spec.systems.find(text);
  if (it != spec.systems.end()) return it->second;
  return SystemSpec::parse(text);
}

int run_verify(const VerifyArgs& args, double tol, bool as_json, bool tol_given,
               bool seed_given) {
  double effective_tol = tol;
  std::uint64_t seed = args.seed;
  const SystemSpec system =
      resolve_system(args.system, args.theory_file, effective_tol, seed, tol_given, seed_given);

  std::vector<Postulate> wanted;
  if (args.postulate.empty()) {
    wanted = {Postulate::SymmetricSharpness, Postulate::CompleteMixing, Postulate::Filtering,
              Postulate::LocalEquality};
  } else if (args.postulate == "symmetric-sharpness") {
    wanted = {Postulate::SymmetricSharpness};
  } else if (args.postulate == "complete-mixing") {
    wanted = {Postulate::CompleteMixing};
  } else if (args.postulate == "filtering") {
    wanted = {Postulate::Filtering};
  } else if (args.postulate == "local-equality") {
    wanted = {Postulate::LocalEquality};
  } else {
    throw std::invalid_argument(
        "unknown postulate '" + args.postulate +
        "' (expected symmetric-sharpness, complete-mixing, filtering, or local-equality)");
  }

  std::vector<VerificationReport> reports;
  for (Postulate p : wanted) {
    switch (p) {
      case Postulate::SymmetricSharpness:
        reports.push_back(verify_symmetric_sharpness(system, args.trials, seed));
        break;
      case Postulate::CompleteMixing:
        reports.push_back(verify_complete_mixing(system, args.trials, seed, effective_tol));
        break;
      case Postulate::Filtering:
        reports.push_back(verify_filtering(system, args.trials, seed));
        break;
      default:
        reports.push_back(
            verify_local_equality(system, system, args.trials, seed, effective_tol));
        break;
    }
  }

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  if (as_json) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r);
  }
  return all_passed ? kExitPass : kExitVerificationFailed;
}

int run_spectral(const std::string& input, bool peel, double tol, bool as_json) {
  const BlockHermitian m = load_matrix_file(input);

  Eigen::VectorXd weights;
  Pds frame;
  if (peel) {
    PeelResult r = spectral_peel(m, tol);
    weights = r.weights;
    frame = std::move(r.frame);
  } else {
    SpectralState r = spectral_state(m);
    weights = r.weights;
    frame = std::move(r.frame);
  }

  if (as_json) {
    json jw = json::array();
    for (Eigen::Index i = 0; i < weights.size(); ++i) jw.push_back(weights(i));
    json jf = json::array();
    for (const auto& member : frame.members) {
      json re = json::array(), im = json::array();
      for (Eigen::Index i = 0; i < member.amplitudes.size(); ++i) {
        re.push_back(member.amplitudes(i).real());
        im.push_back(member.amplitudes(i).imag());
      }
      jf.push_back(json{{"block", member.block}, {"re", std::move(re)}, {"im", std::move(im)}});
    }
    std::cout << json{{"mode", peel ? "peel" : "eigen"},
                      {"weights", std::move(jw)},
                      {"frame", std::move(jf)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (peel ? "peel order weights:" : "descending weights:");
    for (Eigen::Index i = 0; i < weights.size(); ++i) std::cout << " " << weights(i);
    std::cout << "\n";
    for (const auto& member : frame.members)
      std::cout << "  member in block " << member.block << "\n";
  }
  return kExitPass;
}

int run_snake(const std::string& system_text, int trials, std::uint64_t seed, double tol,
              bool as_json) {
  const SystemSpec s = SystemSpec::parse(system_text);
  Rng rng(seed);
  // deterministic spanning sweeps first, random states on top
  double worst_snake = snake_check(s);
  double worst_eta = eta_epsilon_check(s);
  for (int t = 0; t < trials; ++t) {
    const BlockHermitian rho = random_state(rng, s);
    worst_snake = std::max(worst_snake, snake_defect(s, rho));
    worst_eta = std::max(worst_eta, eta_defect(s, rho));
  }
  const bool passed = worst_snake <= tol && worst_eta <= tol;
  if (as_json) {
    std::cout << json{{"system", system_text},
                      {"snake_defect", worst_snake},
                      {"eta_defect", worst_eta},
                      {"passed", passed}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "snake defect " << worst_snake << ", eta defect " << worst_eta
              << " over the spanning sweep and " << trials
              << " random states: " << (passed ? "passed" : "FAILED") << "\n";
  }
  return passed ? kExitPass : kExitVerificationFailed;
}

int run_choi_roundtrip(const std::string& input, double tol, bool as_json) {
  const ProcessChoi p = load_process_file(input);
  const ProcessClass cls = classify_process(p, tol);

  const char* cls_name = "NotCP";
  switch (cls) {
    case ProcessClass::NotCP:
      cls_name = "NotCP";
      break;
    case ProcessClass::CPTraceNonIncreasing:
      cls_name = "CP trace-non-increasing";
      break;
    case ProcessClass::CPTP:
      cls_name = "CP trace-preserving";
      break;
    case ProcessClass::CPTraceIncreasing:
      cls_name = "CP trace-increasing";
      break;
  }

  if (cls == ProcessClass::NotCP) {
    if (as_json)
      std::cout << json{{"class", cls_name}, {"passed", false}}.dump(2) << "\n";
    else
      std::cout << "process is not completely positive; no Kraus form exists\n";
    return kExitVerificationFailed;
  }

  const ProcessChoi back = choi_from_kraus(kraus_from_choi(p, tol));
  const double dist = p.max_abs_diff(back);
  const bool passed = dist <= tol;
  if (as_json) {
    std::cout << json{{"class", cls_name}, {"roundtrip_distance", dist}, {"passed", passed}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << cls_name << "; Choi -> Kraus -> Choi distance " << dist << ": "
              << (passed ? "passed" : "FAILED") << "\n";
  }
  return passed ? kExitPass : kExitVerificationFailed;
}

int run_theory_class(const std::string& system_text, int trials, std::uint64_t seed,
                     bool as_json) {
  const SystemSpec s = SystemSpec::parse(system_text);
  const TheoryClassification cls = classify_theory_operational(s, trials, seed);
  const bool consistent = cls.structural == cls.operational;

  if (as_json) {
    std::cout << json{{"system", system_text},
                      {"class", theory_class_name(cls.structural)},
                      {"operational", theory_class_name(cls.operational)},
                      {"consistent", consistent},
                      {"reports",
                       json::array({report_to_json(cls.distinguishability),
                                    report_to_json(cls.indistinguishability)})}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << theory_class_name(cls.structural) << "\n";
    if (!consistent)
      std::cout << "operational witnesses disagree: " << theory_class_name(cls.operational)
                << "\n";
  }
  return consistent ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int cli_run(int argc, char** argv) {
  CLI::App app{"block-Hermitian operational theories: classification, spectra, processes"};
  app.require_subcommand(1);
  // --json and --tol live on the app; subcommands pass unmatched flags up
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  double tol = 1e-9;
  bool env_tol_bad = false;
  if (const char* env = std::getenv("JORDANOPT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      env_tol_bad = true;
    else
      tol = v;
  }
  auto* tol_opt = app.add_option("--tol", tol, "numerical tolerance (overrides JORDANOPT_TOL)")
                      ->check(CLI::PositiveNumber);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "match (rank, dim) against the table");
  int cl_rank = 0;
  long long cl_dim = 0;
  classify_cmd->add_option("--rank", cl_rank, "algebra rank")->required();
  classify_cmd->add_option("--dim", cl_dim, "algebra dimension")->required();

  // exclude
  auto* exclude_cmd =
      app.add_subcommand("exclude", "squared-signature exclusion report for a simple algebra");
  std::string ex_kind;
  exclude_cmd->add_option("--kind", ex_kind, "algebra name, e.g. RealSym(2)")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run postulate verifiers on a system");
  VerifyArgs vargs;
  verify_cmd->add_option("--system", vargs.system, "block dims, e.g. \"1,2\", or a theory label")
      ->required();
  verify_cmd->add_option("--postulate", vargs.postulate,
                         "symmetric-sharpness | complete-mixing | filtering | local-equality");
  verify_cmd->add_option("--trials", vargs.trials, "trials per verifier")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = verify_cmd->add_option("--seed", vargs.seed, "random seed");
  verify_cmd->add_option("--theory", vargs.theory_file, "theory spec JSON file");

  // spectral
  auto* spectral_cmd = app.add_subcommand("spectral", "decompose a matrix file");
  std::string sp_input;
  bool sp_peel = false;
  spectral_cmd->add_option("--input", sp_input, "matrix JSON file")->required();
  spectral_cmd->add_flag("--peel", sp_peel, "use the constructive peel");

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "compose two systems");
  std::string tn_a, tn_b;
  tensor_cmd->add_option("--a", tn_a, "first system block dims")->required();
  tensor_cmd->add_option("--b", tn_b, "second system block dims")->required();

  // snake
  auto* snake_cmd =
      app.add_subcommand("snake", "check the snake identities on a spanning sweep plus random states");
  std::string sn_system;
  int sn_trials = 20;
  std::uint64_t sn_seed = 0;
  snake_cmd->add_option("--system", sn_system, "block dims")->required();
  snake_cmd->add_option("--trials", sn_trials, "number of random states")
      ->check(CLI::PositiveNumber);
  snake_cmd->add_option("--seed", sn_seed, "random seed");

  // choi-roundtrip
  auto* choi_cmd = app.add_subcommand("choi-roundtrip", "Kraus round trip of a process file");
  std::string ch_input;
  choi_cmd->add_option("--input", ch_input, "process JSON file")->required();

  // theory-class
  auto* theory_cmd = app.add_subcommand("theory-class", "classify a system's theory");
  std::string th_system;
  int th_trials = 200;
  std::uint64_t th_seed = 0;
  theory_cmd->add_option("--system", th_system, "block dims")->required();
  theory_cmd->add_option("--trials", th_trials, "witness sampling trials")
      ->check(CLI::PositiveNumber);
  theory_cmd->add_option("--seed", th_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  if (env_tol_bad && tol_opt->count() == 0) {
    std::cerr << "input error: JORDANOPT_TOL is not a positive number\n";
    return kExitInputError;
  }

  try {
    if (*classify_cmd) {
      const auto match = classify_simple(cl_rank, cl_dim);
      if (as_json) {
        std::cout << json{{"rank", cl_rank},
                          {"dim", cl_dim},
                          {"match", match ? json(format_kind(*match)) : json(nullptr)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << kind_name_or_nomatch(match) << "\n";
      }
      return kExitPass;
    }
    if (*exclude_cmd) {
      const ExclusionReport rep = exclusion_check(parse_kind(ex_kind));
      if (as_json) {
        std::cout << json{{"kind", format_kind(rep.kind)},
                          {"squared_rank", rep.squared_rank},
                          {"squared_dim", rep.squared_dim},
                          {"match", rep.match ? json(format_kind(*rep.match)) : json(nullptr)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << format_kind(rep.kind) << ": squared signature (rank " << rep.squared_rank
                  << ", dim " << rep.squared_dim << ") -> " << kind_name_or_nomatch(rep.match)
                  << "\n";
      }
      return kExitPass;
    }
    if (*verify_cmd)
      return run_verify(vargs, tol, as_json, tol_opt->count() > 0, seed_opt->count() > 0);
    if (*spectral_cmd) return run_spectral(sp_input, sp_peel, tol, as_json);
    if (*tensor_cmd) {
      const SystemSpec a = SystemSpec::parse(tn_a);
      const SystemSpec b = SystemSpec::parse(tn_b);
      const SystemSpec c = tensor_system(a, b);
      if (as_json) {
        json dims = json::array();
        for (int d : c.blocks) dims.push_back(d);
        std::cout << json{{"blocks", std::move(dims)}, {"N", c.rank()}, {"D", c.dim()}}.dump(2)
                  << "\n";
      } else {
        std::cout << "blocks \"" << c.to_string() << "\", N=" << c.rank() << ", D=" << c.dim()
                  << "\n";
      }
      return kExitPass;
    }
    if (*snake_cmd) return run_snake(sn_system, sn_trials, sn_seed, tol, as_json);
    if (*choi_cmd) return run_choi_roundtrip(ch_input, tol, as_json);
    if (*theory_cmd) return run_theory_class(th_system, th_trials, th_seed, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace jordanopt
