#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kgap {

// A failed law or axiom together with the elements that witness the failure.
struct Violation {
  std::string law;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << v.law << "(" << v.witness << ")";
}

bool has_violation(const std::vector<Violation>& violations, const std::string& law);

}  // namespace kgap
