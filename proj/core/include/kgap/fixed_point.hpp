#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgap/dilator.hpp"
#include "kgap/ordinal.hpp"
#include "kgap/pair_memo.hpp"
#include "kgap/violation.hpp"

namespace kgap {

/// Handle of a hash-consed term inside its TermStore.
using TermId = Element;

/// alpha * (a, sigma): label, support a and a payload of full support whose
/// slots are TermIds.
struct TermNode {
  Ordinal label;
  std::vector<TermId> support;            // ascending ids
  std::vector<TermId> canonical_support;  // ascending canonical order
  DilatorElement payload;
  std::uint64_t length = 1;
  std::uint32_t height = 0;
};

/// Trace of one term comparison, recorded for --explain.
struct LeqTrace {
  TermId s = 0;
  TermId t = 0;
  bool label_ok = false;
  bool clause_i = false;
  bool clause_ii = false;
  bool result = false;
  std::optional<TermId> witness;  // support member of t used by clause (ii)
  std::vector<LeqTrace> children;
};

/// The term model of the initial fixed point for one dilator and label bound.
///
/// Terms are interned: two ids are equal iff the terms are structurally
/// equal. Interning and memoized comparison may be used from several threads.
class TermStore {
 public:
  TermStore(std::shared_ptr<const Dilator> dilator, Ordinal label_bound);
  ~TermStore();
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;

  const Dilator& dilator() const { return *dilator_; }
  const std::shared_ptr<const Dilator>& dilator_ptr() const { return dilator_; }
  const Ordinal& label_bound() const { return label_bound_; }

  std::size_t size() const { return size_.load(std::memory_order_acquire); }
  const TermNode& node(TermId id) const;
  bool contains(TermId id) const { return id < size(); }

  /// kappa(alpha, sigma) where the slots of sigma are existing term ids.
  /// Throws label_out_of_range for alpha >= bound and invalid_argument for
  /// unknown slots or malformed payloads.
  TermId kappa(const Ordinal& label, const DilatorElement& sigma);
  std::optional<TermId> find(const Ordinal& label, const DilatorElement& sigma) const;

  bool leq(TermId s, TermId t) const;
  LeqTrace explain(TermId s, TermId t, std::size_t max_depth = 16) const;

  /// Total order on terms used as the canonical code: length, label,
  /// canonically sorted supports, payload shape, then slot positions.
  std::strong_ordering canonical_compare(TermId a, TermId b) const;
  bool canonical_less(TermId a, TermId b) const { return canonical_compare(a, b) < 0; }
  void sort_canonically(std::vector<TermId>& ids) const;

 private:
  struct Key {
    Ordinal label;
    DilatorElement payload;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 12;

  bool clause_one(const TermNode& a, const TermNode& b) const;
  std::optional<TermId> clause_two(TermId s, const TermNode& b) const;

  std::shared_ptr<const Dilator> dilator_;
  Ordinal label_bound_;
  std::unique_ptr<std::atomic<TermNode*>[]> chunks_;
  std::atomic<std::size_t> size_{0};
  mutable std::mutex intern_mutex_;
  std::unordered_map<Key, TermId, KeyHash> index_;
  mutable PairMemo memo_;
};

/// Free-function forms of the store operations.
bool term_leq(const TermStore& store, TermId s, TermId t);
TermId kappa(TermStore& store, const Ordinal& label, const DilatorElement& sigma);
std::pair<Ordinal, DilatorElement> kappa_inverse(const TermStore& store, TermId t);

/// All terms of length <= max_length with labels from `labels` (ascending,
/// nonempty, below the bound); multiset payloads are capped at `budget`
/// entries. Sorted by canonical code.
std::vector<TermId> enumerate_terms(TermStore& store, std::span<const Ordinal> labels,
                                    std::uint64_t max_length, std::size_t budget);

/// Order on a fragment as an explicit poset over the term ids.
FinitePoset fragment_order(const TermStore& store, std::span<const TermId> fragment);

/// Checks h(s) < h(t) for every support member s of every t in the fragment,
/// reading heights through `height`. Also reports fragments that are not
/// closed under supports (law "closure").
std::vector<Violation> check_height_criterion(const TermStore& store,
                                              std::span<const TermId> fragment,
                                              function_ref<std::uint32_t(TermId)> height);
std::vector<Violation> check_height_criterion(const TermStore& store,
                                              std::span<const TermId> fragment);

/// Strictly monotone partial map between label sets.
using LabelMap = std::map<Ordinal, Ordinal>;

/// The embedding of (*) along I: relabel through I and push payloads along the
/// recursively embedded supports. Throws non_monotone_label_map,
/// unmapped_label, or wrong_dilator (stores over different dilators).
TermId embed_into_larger(const LabelMap& map, const TermStore& source, TermId t,
                         TermStore& target);

/// Finite sequences over Z, as element ids of the Z order.
using ZSequence = std::vector<Element>;

/// Subsequence embedding with pointwise domination, decided greedily.
bool higman_leq(const FinitePoset& z, const ZSequence& a, const ZSequence& b);
/// <> -> 0*(0), z^s -> 0*((z, f(s))). The store must use the cons dilator.
TermId higman_to_term(TermStore& store, const ZSequence& seq);
ZSequence term_to_higman(const TermStore& store, TermId t);

/// Weakly decreasing label sequences, compared lexicographically.
using LabelSequence = std::vector<Ordinal>;

bool omega_nu_leq(const LabelSequence& a, const LabelSequence& b);
/// f(<>) = kappa(0, 0), f(alpha^s) = kappa(alpha, 1+f(s)). The store must use
/// the 1+X dilator. Throws not_weakly_decreasing.
TermId omega_nu_embed(TermStore& store, const LabelSequence& seq);

}  // namespace kgap
