#include "jordanopt/system.hpp"

#include <sstream>
#include <stdexcept>

namespace jordanopt {

SystemSpec::SystemSpec(std::vector<int> dims) : blocks(std::move(dims)) {
  if (blocks.empty()) throw std::invalid_argument("SystemSpec: needs at least one block");
  for (int d : blocks)
    if (d < 1) throw std::invalid_argument("SystemSpec: block dimensions must be positive");
}

int SystemSpec::rank() const {
  int n = 0;
  for (int d : blocks) n += d;
  return n;
}

long long SystemSpec::dim() const {
  long long s = 0;
  for (int d : blocks) s += static_cast<long long>(d) * d;
  return s;
}

std::string SystemSpec::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks[i]);
  }
  return out;
}

SystemSpec SystemSpec::parse(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t used = 0;
      const int d = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
      dims.push_back(d);
    } catch (const std::exception&) {
      throw std::invalid_argument("SystemSpec::parse: bad dimension '" + token + "'");
    }
  }
  if (dims.empty()) throw std::invalid_argument("SystemSpec::parse: empty dimension list");
  return SystemSpec(std::move(dims));
}

}  // namespace jordanopt
