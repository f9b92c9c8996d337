#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgap/fixed_point.hpp"
#include "kgap/ordinal.hpp"
#include "kgap/violation.hpp"

namespace kgap {

/// Root label.
const Ordinal& q_label(const TermStore& store, TermId t);

/// K_gamma(t): t and, recursively, the members of K_gamma over its support,
/// provided the label of t is at least gamma; empty otherwise. Ascending ids.
std::vector<TermId> k_set(const TermStore& store, const Ordinal& gamma, TermId t);

/// Union of k_set(gamma, r) over the support r of t's payload.
std::vector<TermId> k_set_payload(const TermStore& store, const Ordinal& gamma, TermId t);

/// s << t: s lies in K_gamma of t's payload for gamma = min(q(s), q(t)).
bool ll(const TermStore& store, TermId s, TermId t);

/// Terms s with s << t, ascending ids. Always a subset of k_set_payload(0, t).
std::vector<TermId> ll_predecessors(const TermStore& store, TermId t);

/// Reflexive transitive closure of <<.
bool ll_star(const TermStore& store, TermId s, TermId t);

/// 0 without predecessors, otherwise 1 + the largest predecessor rank.
std::uint32_t rank(const TermStore& store, TermId t);

/// 0 if q(t) < beta, q(t) otherwise.
Ordinal q_beta(const Ordinal& beta, const TermStore& store, TermId t);

/// omega * q_beta(t) + rank(t).
Ordinal p_beta(const Ordinal& beta, const TermStore& store, TermId t);

/// Support-closed set of terms with cached predecessors and ranks.
class GapFragment {
 public:
  /// Throws invalid_argument if `terms` is not closed under supports.
  GapFragment(const TermStore& store, std::vector<TermId> terms);

  const TermStore& store() const { return *store_; }
  std::span<const TermId> terms() const { return terms_; }
  const std::vector<TermId>& predecessors(TermId t) const;
  std::uint32_t rank(TermId t) const;

 private:
  const TermStore* store_;
  std::vector<TermId> terms_;
  std::unordered_map<TermId, std::vector<TermId>> predecessors_;
  std::unordered_map<TermId, std::uint32_t> ranks_;
};

/// Explicit finite structure (X, <=, q, <<) on elements 0..n-1. `ll_bound`
/// is the finite set each predecessor set must lie in.
struct GapModel {
  std::vector<std::string> names;
  std::vector<Ordinal> q;
  std::vector<std::uint8_t> leq;       // n*n, row-major
  std::vector<std::uint8_t> ll;        // n*n
  std::vector<std::uint8_t> ll_bound;  // n*n

  std::size_t size() const { return q.size(); }
  bool leq_at(std::size_t i, std::size_t j) const { return leq[i * size() + j] != 0; }
  bool ll_at(std::size_t i, std::size_t j) const { return ll[i * size() + j] != 0; }
  bool bound_at(std::size_t i, std::size_t j) const { return ll_bound[i * size() + j] != 0; }

  /// Empty structure of n elements named by index, all relations false.
  static GapModel blank(std::size_t n);
};

GapModel gap_model(const GapFragment& fragment);

/// Axioms (i)-(v) of a gap order: law names axiom_i .. axiom_v. Chains for
/// (iii) have between 2 and `chain_length` << steps. (iv) is checked as
/// acyclicity of << plus a rank that strictly increases along <<.
std::vector<Violation> check_gap_axioms(const GapModel& model, std::size_t chain_length = 4);
std::vector<Violation> check_gap_axioms(const GapFragment& fragment, std::size_t chain_length = 4);

/// k_set(gamma, t) is contained in k_set(delta, t) whenever gamma >= delta, and
/// s in k_set(gamma, t) implies k_set(gamma, s) in k_set(gamma, t). Law names
/// kset_monotone and kset_idempotent.
std::vector<Violation> check_k_set_laws(const TermStore& store, std::span<const TermId> fragment,
                                        std::span<const Ordinal> gammas);

/// The << digraph of a fragment.
std::string ll_dot(const TermStore& store, std::span<const TermId> fragment);

}  // namespace kgap
