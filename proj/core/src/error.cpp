#include "kgap/error.hpp"

#include <algorithm>

#include "kgap/violation.hpp"

namespace kgap {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::label_out_of_range: return "label_out_of_range";
    case Errc::non_monotone_label_map: return "non_monotone_label_map";
    case Errc::unmapped_label: return "unmapped_label";
    case Errc::not_weakly_decreasing: return "not_weakly_decreasing";
    case Errc::wrong_dilator: return "wrong_dilator";
    case Errc::size_limit_exceeded: return "size_limit_exceeded";
    case Errc::not_perfect: return "not_perfect";
    case Errc::not_prefix_closed: return "not_prefix_closed";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::capacity_exceeded: return "capacity_exceeded";
  }
  return "unknown";
}

bool has_violation(const std::vector<Violation>& violations, const std::string& law) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

}  // namespace kgap
