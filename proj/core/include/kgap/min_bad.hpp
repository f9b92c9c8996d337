#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include <json.hpp>

#include "kgap/fixed_point.hpp"
#include "kgap/ordinal.hpp"

namespace kgap {

struct SeqEntry {
  std::uint64_t index = 0;
  TermId value = 0;

  friend bool operator==(const SeqEntry&, const SeqEntry&) = default;
  friend auto operator<=>(const SeqEntry&, const SeqEntry&) = default;
};

/// A finite sequence sigma : a -> terms, a a finite set of naturals.
class FiniteSeq {
 public:
  FiniteSeq() = default;
  /// Throws invalid_argument unless indices strictly increase.
  explicit FiniteSeq(std::vector<SeqEntry> entries);

  const std::vector<SeqEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Restriction to indices below k.
  FiniteSeq below(std::uint64_t k) const;
  /// First n entries.
  FiniteSeq prefix(std::size_t n) const;
  FiniteSeq extended(SeqEntry entry) const;

  friend bool operator==(const FiniteSeq&, const FiniteSeq&) = default;
  friend auto operator<=>(const FiniteSeq&, const FiniteSeq&) = default;

 private:
  std::vector<SeqEntry> entries_;
};

/// No i < j with value(i) <= value(j).
bool is_bad(const TermStore& store, const FiniteSeq& g);
/// Root labels weakly increase.
bool is_regular(const TermStore& store, const FiniteSeq& g);

/// g0 angle_beta g1: the index set of g0 is contained in that of g1 and some
/// index k of g1 has g0, g1 agreeing below k while p_beta of g0 at its first
/// index >= k is below p_beta(g1(k)).
bool angle_beta(const TermStore& store, const FiniteSeq& g0, const FiniteSeq& g1,
                const Ordinal& beta);

/// Nonempty prefix-closed set of finite sequences.
class PrefixTree {
 public:
  /// Every sequence must have all its prefixes present (not_prefix_closed).
  static PrefixTree from_sequences(std::vector<FiniteSeq> sequences);
  /// Closes the given branches under prefixes.
  static PrefixTree from_branches(std::span<const FiniteSeq> branches);

  const std::set<FiniteSeq>& sequences() const { return sequences_; }
  bool contains(const FiniteSeq& s) const { return sequences_.count(s) != 0; }
  /// Entries e with prefix + e in the tree, ascending.
  std::vector<SeqEntry> extensions(const FiniteSeq& prefix) const;
  /// Every sequence shorter than `depth` has an extension.
  bool is_perfect(std::size_t depth) const;
  /// Sequences of exactly `depth` entries.
  std::vector<FiniteSeq> branches(std::size_t depth) const;

 private:
  std::set<FiniteSeq> sequences_;
};

/// Lexicographic key of one selection step: p_beta, then index, then the
/// canonical term order.
std::strong_ordering step_compare(const TermStore& store, const Ordinal& beta, const SeqEntry& a,
                                  const SeqEntry& b);

/// Greedy selection of a branch of length `depth` whose prefixes are all
/// beta-minimal. Throws not_perfect if the tree is not perfect to `depth`.
FiniteSeq beta_minimal_branch(const TermStore& store, const PrefixTree& tree,
                              const Ordinal& beta, std::size_t depth);

/// Minimum over all branches of length `depth` under the stepwise key.
FiniteSeq brute_min_branch(const TermStore& store, const PrefixTree& tree, const Ordinal& beta,
                           std::size_t depth);

/// A branch g' of length `depth` with g' angle_beta g, if any.
std::optional<FiniteSeq> smaller_branch(const TermStore& store, const PrefixTree& tree,
                                        const Ordinal& beta, std::size_t depth,
                                        const FiniteSeq& g);

/// An antichain of `size` terms of the fragment, preferring canonical order.
/// Exhaustive search is complete; the greedy variant may miss antichains.
std::optional<std::vector<TermId>> find_antichain(const TermStore& store,
                                                  std::span<const TermId> fragment,
                                                  std::size_t size, bool exhaustive = true);

/// Random perfect prefix tree of the given depth with at most `max_branches`
/// branches; values drawn from `pool`.
PrefixTree random_prefix_tree(std::span<const TermId> pool, std::size_t depth,
                              std::size_t max_branches, std::mt19937_64& rng);

/// {"sequences": [[{"index": i, "term": "..."}, ...], ...]} must be prefix
/// closed; {"branches": [...]} is closed automatically.
PrefixTree prefix_tree_from_json(TermStore& store, const nlohmann::json& j);
nlohmann::json prefix_tree_to_json(const TermStore& store, const PrefixTree& tree);
nlohmann::json seq_to_json(const TermStore& store, const FiniteSeq& g);

}  // namespace kgap
