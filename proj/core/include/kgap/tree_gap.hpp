#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgap/fixed_point.hpp"
#include "kgap/ordinal.hpp"
#include "kgap/pair_memo.hpp"

namespace kgap {

/// Rooted unordered tree with ordinal labels. Children are kept sorted, so
/// equal multisets of subtrees give equal values.
struct LabeledTree {
  Ordinal label;
  std::vector<LabeledTree> children;

  LabeledTree() = default;
  explicit LabeledTree(Ordinal root, std::vector<LabeledTree> kids = {});

  std::size_t vertex_count() const;
  /// LABEL[child,child,...], e.g. 2[0[2[]]]
  std::string to_string() const;
  /// Throws ParseError with a 1-based position.
  static LabeledTree parse(std::string_view text);

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  friend std::strong_ordering operator<=>(const LabeledTree& a, const LabeledTree& b);
};

/// Recursive gap order with memoization over interned subtrees. Not
/// thread-safe.
class GapDecider {
 public:
  using Id = std::uint32_t;

  Id intern(const LabeledTree& tree);
  bool leq(Id s, Id t);
  bool leq(const LabeledTree& s, const LabeledTree& t) { return leq(intern(s), intern(t)); }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Ordinal label;
    std::vector<Id> children;
    friend bool operator==(const Node&, const Node&) = default;
  };
  struct NodeHash {
    std::size_t operator()(const Node& n) const;
  };

  std::vector<Node> nodes_;
  std::unordered_map<Node, Id, NodeHash> index_;
  PairMemo memo_;
};

/// gap_leq via a throwaway GapDecider.
bool gap_leq(const LabeledTree& s, const LabeledTree& t);

/// Largest tree the exhaustive oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 12;

/// Vertex-array form of a tree for the oracle: preorder numbering, parent
/// links and labels. Flatten once when comparing many pairs.
struct FlatTree {
  std::uint8_t size = 0;
  std::array<std::int8_t, kOracleMaxVertices> parent{};
  std::array<std::uint16_t, kOracleMaxVertices> subtree{};   // bitmask, inclusive
  std::array<std::uint16_t, kOracleMaxVertices> ancestors{};  // bitmask, inclusive
  std::array<std::uint16_t, kOracleMaxVertices> children{};   // bitmask
  std::array<std::uint64_t, kOracleMaxVertices> small_label{};
  bool small_labels = true;  // all labels finite: compare small_label
  std::vector<Ordinal> labels;

  /// Throws size_limit_exceeded above kOracleMaxVertices.
  static FlatTree from(const LabeledTree& tree);
};

/// Exhaustive search for an injective, infimum-preserving vertex map that
/// satisfies the gap conditions on explicit paths of t.
bool gap_leq_oracle(const FlatTree& s, const FlatTree& t);
bool gap_leq_oracle(const LabeledTree& s, const LabeledTree& t);

/// alpha[t0,...] -> alpha*({t_i}, [t0,...]). The store must use the multiset
/// dilator (wrong_dilator otherwise).
TermId tree_to_term(TermStore& store, const LabeledTree& tree);
LabeledTree term_to_tree(const TermStore& store, TermId t);

/// Every tree with at most `max_vertices` vertices over the given labels,
/// ordered by vertex count and then by tree order.
std::vector<LabeledTree> enumerate_trees(std::span<const Ordinal> labels,
                                         std::size_t max_vertices);

}  // namespace kgap
