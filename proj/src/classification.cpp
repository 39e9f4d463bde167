#include "jordanopt/classification.hpp"

#include <stdexcept>

namespace jordanopt {

std::optional<EjaKind> classify_simple(int rank, long long dim) {
  if (rank < 1 || dim < 1) return std::nullopt;

  if (rank == 1) {
    if (dim == 1) return EjaKind::complex_herm(1);
    return std::nullopt;
  }

  if (rank == 2) {
    switch (dim) {
      case 3:
        return EjaKind::real_sym(2);
      case 4:
        return EjaKind::complex_herm(2);
      case 6:
        return EjaKind::quat_herm(2);
      default:
        if (dim >= 5) return EjaKind::spin(static_cast<int>(dim));
        return std::nullopt;
    }
  }

  if (rank == 3 && dim == 27) return EjaKind::oct_herm3();

  // The three matrix-family dimension formulas are strictly ordered for
  // n >= 2 (n(n+1)/2 < n^2 < n(2n-1)), so at most one can match.
  const long long n = rank;
  if (dim == n * (n + 1) / 2) return EjaKind::real_sym(rank);
  if (dim == n * n) return EjaKind::complex_herm(rank);
  if (dim == n * (2 * n - 1)) return EjaKind::quat_herm(rank);
  return std::nullopt;
}

ExclusionReport exclusion_check(const EjaKind& kind) {
  ExclusionReport rep;
  rep.kind = kind;
  rep.squared_rank = kind.rank() * kind.rank();
  rep.squared_dim = kind.dim() * kind.dim();
  rep.match = classify_simple(rep.squared_rank, rep.squared_dim);
  return rep;
}

std::string format_kind(const EjaKind& kind) {
  switch (kind.family) {
    case EjaFamily::RealSym:
      return "RealSym(" + std::to_string(kind.n) + ")";
    case EjaFamily::ComplexHerm:
      return "ComplexHerm(" + std::to_string(kind.n) + ")";
    case EjaFamily::QuatHerm:
      return "QuatHerm(" + std::to_string(kind.n) + ")";
    case EjaFamily::Spin:
      return "Spin(" + std::to_string(kind.n) + ")";
    case EjaFamily::OctHerm3:
      return "OctHerm3";
  }
  throw std::invalid_argument("format_kind: unknown family");
}

EjaKind parse_kind(const std::string& text) {
  if (text == "OctHerm3") return EjaKind::oct_herm3();

  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("parse_kind: expected Family(n) or OctHerm3, got '" + text + "'");
  const std::string family = text.substr(0, open);
  const std::string arg = text.substr(open + 1, text.size() - open - 2);

  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_kind: bad size parameter in '" + text + "'");
  }
  if (n < 1) throw std::invalid_argument("parse_kind: size must be positive in '" + text + "'");

  if (family == "RealSym") return EjaKind::real_sym(n);
  if (family == "ComplexHerm") return EjaKind::complex_herm(n);
  if (family == "QuatHerm") return EjaKind::quat_herm(n);
  if (family == "Spin") {
    if (n < 5) throw std::invalid_argument("parse_kind: Spin(s) requires s >= 5");
    return EjaKind::spin(n);
  }
  throw std::invalid_argument("parse_kind: unknown family '" + family + "'");
}

}  // namespace jordanopt
