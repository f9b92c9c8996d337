#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kgap/violation.hpp"

namespace kgap {

/// Outcome of one exhaustive property suite.
struct SuiteResult {
  int number = 0;
  std::string id;
  std::string title;
  bool passed = false;
  std::uint64_t checked = 0;  // instances examined
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::uint64_t>> stats;
  double seconds = 0;

  std::uint64_t stat(const std::string& key) const;
};

struct SuiteOptions {
  /// Smaller instance bounds for a fast smoke run.
  bool quick = false;
  /// "antisym" corrupts the term order before the partial-order suite.
  std::string inject_fault;
  /// Chain length for gap axiom (iii).
  std::size_t chain_length = 4;
  /// Generated prefix trees for the minimality suite.
  std::size_t prefix_trees = 120;
  std::uint64_t seed = 20240601;
};

/// Suite ids in running order: oracle_equivalence, partial_order,
/// height_monotonicity, fixed_point_equivalence, gap_axioms, embedding,
/// higman, omega_nu, beta_minimality, dilator_laws.
std::vector<std::string> suite_ids();

/// Throws invalid_argument for unknown ids.
SuiteResult run_suite(const std::string& id, const SuiteOptions& options);

}  // namespace kgap
