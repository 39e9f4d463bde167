#include "jordanopt/io.hpp"

#include <fstream>
#include <stdexcept>

namespace jordanopt {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

Eigen::MatrixXd real_array(const json& j, const char* key, int dim) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("block missing '") + key + "'");
  const auto& rows = j.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument(std::string("block '") + key + "' has wrong row count");
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = rows.at(static_cast<size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument(std::string("block '") + key + "' has wrong column count");
    for (int c = 0; c < dim; ++c) m(r, c) = row.at(static_cast<size_t>(c)).get<double>();
  }
  return m;
}

json matrix_block_to_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd matrix_block_from_json(const json& j, int dim) {
  const Eigen::MatrixXd re = real_array(j, "re", dim);
  const Eigen::MatrixXd im = real_array(j, "im", dim);
  constexpr double kSymTol = 1e-9;
  if ((re - re.transpose()).cwiseAbs().maxCoeff() > kSymTol)
    throw std::invalid_argument("block 're' part is not symmetric");
  if ((im + im.transpose()).cwiseAbs().maxCoeff() > kSymTol)
    throw std::invalid_argument("block 'im' part is not antisymmetric");
  return re.cast<std::complex<double>>() +
         std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
}

SystemSpec system_from_json(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing '") + key + "' field");
  const auto& dims = j.at(key);
  if (!dims.is_array() || dims.empty())
    throw std::invalid_argument(std::string("'") + key + "' must be a nonempty array");
  std::vector<int> out;
  for (const auto& d : dims) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw std::invalid_argument(std::string("'") + key + "' entries must be positive integers");
    out.push_back(d.get<int>());
  }
  return SystemSpec(std::move(out));
}

json system_to_json(const SystemSpec& s) {
  json out = json::array();
  for (int d : s.blocks) out.push_back(d);
  return out;
}

}  // namespace

BlockHermitian matrix_from_json(const json& j) {
  const SystemSpec system = system_from_json(j, "system");
  if (!j.contains("blocks") || !j.at("blocks").is_array())
    throw std::invalid_argument("matrix file missing 'blocks' array");
  const auto& blocks = j.at("blocks");
  if (static_cast<int>(blocks.size()) != system.block_count())
    throw std::invalid_argument("matrix file block count does not match system");
  std::vector<Eigen::MatrixXcd> mats;
  for (int l = 0; l < system.block_count(); ++l)
    mats.push_back(matrix_block_from_json(blocks.at(static_cast<size_t>(l)),
                                          system.block_dim(l)));
  return BlockHermitian(system, std::move(mats));
}

json matrix_to_json(const BlockHermitian& m) {
  json blocks = json::array();
  for (int l = 0; l < m.block_count(); ++l) blocks.push_back(matrix_block_to_json(m.block(l)));
  return json{{"system", system_to_json(m.system())}, {"blocks", std::move(blocks)}};
}

BlockHermitian load_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

void save_matrix_file(const std::string& path, const BlockHermitian& m) {
  write_json_file(path, matrix_to_json(m));
}

ProcessChoi process_from_json(const json& j) {
  const SystemSpec in = system_from_json(j, "input");
  const SystemSpec out = system_from_json(j, "output");
  if (!j.contains("choi") || !j.at("choi").is_array())
    throw std::invalid_argument("process file missing 'choi' array");
  const auto& blocks = j.at("choi");
  const size_t expected =
      static_cast<size_t>(in.block_count()) * static_cast<size_t>(out.block_count());
  if (blocks.size() != expected)
    throw std::invalid_argument("process file Choi block count does not match systems");
  std::vector<Eigen::MatrixXcd> mats;
  size_t idx = 0;
  for (int i = 0; i < in.block_count(); ++i)
    for (int jj = 0; jj < out.block_count(); ++jj)
      mats.push_back(
          matrix_block_from_json(blocks.at(idx++), in.block_dim(i) * out.block_dim(jj)));
  return ProcessChoi(in, out, std::move(mats));
}

json process_to_json(const ProcessChoi& p) {
  json blocks = json::array();
  for (const auto& c : p.choi) blocks.push_back(matrix_block_to_json(c));
  return json{{"input", system_to_json(p.input)},
              {"output", system_to_json(p.output)},
              {"choi", std::move(blocks)}};
}

ProcessChoi load_process_file(const std::string& path) {
  return process_from_json(read_json_file(path));
}

void save_process_file(const std::string& path, const ProcessChoi& p) {
  write_json_file(path, process_to_json(p));
}

TheorySpec theory_spec_from_json(const json& j) {
  TheorySpec spec;
  if (!j.contains("systems") || !j.at("systems").is_object())
    throw std::invalid_argument("theory spec missing 'systems' object");
  for (const auto& [label, dims] : j.at("systems").items()) {
    json wrapper{{"system", dims}};
    spec.systems.emplace(label, system_from_json(wrapper, "system"));
  }
  if (spec.systems.empty()) throw std::invalid_argument("theory spec names no systems");
  if (j.contains("tolerance")) {
    spec.tolerance = j.at("tolerance").get<double>();
    if (!(spec.tolerance > 0.0))
      throw std::invalid_argument("theory spec tolerance must be positive");
  }
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

TheorySpec load_theory_spec(const std::string& path) {
  return theory_spec_from_json(read_json_file(path));
}

json report_to_json(const VerificationReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses) witnesses.push_back(w);
  return json{{"postulate", postulate_name(rep.postulate)},
              {"system", system_to_json(rep.system)},
              {"trials", rep.trials},
              {"max_deviation", rep.max_deviation},
              {"passed", rep.passed},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace jordanopt
