#pragma once

// JSON file formats: model elements (per-block real and imaginary parts),
// processes in Choi form, theory spec files naming systems, and the
// serialization of verification reports.

#include <map>
#include <string>

#include "json.hpp"
#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/process.hpp"
#include "jordanopt/verify.hpp"

namespace jordanopt {

// {"system": [dims], "blocks": [{"re": [[..]], "im": [[..]]}, ...]}
// re must be symmetric and im antisymmetric within 1e-9.
BlockHermitian matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const BlockHermitian& m);
BlockHermitian load_matrix_file(const std::string& path);
void save_matrix_file(const std::string& path, const BlockHermitian& m);

// {"input": [dims], "output": [dims], "choi": [{"re": .., "im": ..}, ...]}
// with Choi blocks in input-major (i, j) order.
ProcessChoi process_from_json(const nlohmann::json& j);
nlohmann::json process_to_json(const ProcessChoi& p);
ProcessChoi load_process_file(const std::string& path);
void save_process_file(const std::string& path, const ProcessChoi& p);

struct TheorySpec {
  std::map<std::string, SystemSpec> systems;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
};

// {"systems": {"A": [1,2], ...}, "tolerance": 1e-9, "seed": 0}; tolerance
// and seed are optional and default as above.
TheorySpec theory_spec_from_json(const nlohmann::json& j);
TheorySpec load_theory_spec(const std::string& path);

nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace jordanopt
