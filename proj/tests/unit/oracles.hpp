#pragma once

// Independent reference computations used to derive expected values in the
// unit tests. None of these call into the code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "kgap/ordinal.hpp"
#include "kgap/poset.hpp"
#include "kgap/tree_gap.hpp"

namespace oracle {

using kgap::LabeledTree;
using kgap::Ordinal;

/// Ordinal sum in Cantor normal form: terms of a with exponent below the
/// leading exponent of b are absorbed.
inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.push_back(t);
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient += rest->coefficient;
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

/// omega * a computed as a sum of omega^(1+e) * c terms, with 1+e via add().
inline Ordinal omega_times(const Ordinal& a) {
  Ordinal sum;
  for (const auto& t : a.terms()) {
    const Ordinal exponent = add(Ordinal::nat(1), t.exponent);
    sum = add(sum, Ordinal::omega_power(exponent, t.coefficient));
  }
  return sum;
}

/// Length of the term corresponding to a tree: distinct children count once.
inline std::uint64_t tree_length(const LabeledTree& t) {
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0 && t.children[i] == t.children[i - 1]) continue;
    l += 2 * tree_length(t.children[i]);
  }
  return l;
}

inline std::size_t tree_height(const LabeledTree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, tree_height(c) + 1);
  return h;
}

inline std::size_t max_fanout(const LabeledTree& t) {
  std::size_t f = t.children.size();
  for (const auto& c : t.children) f = std::max(f, max_fanout(c));
  return f;
}

/// K_gamma on trees: subtrees reachable from the root through vertices whose
/// labels are all >= gamma, the endpoint included.
inline std::set<LabeledTree> k_set(const Ordinal& gamma, const LabeledTree& t) {
  std::set<LabeledTree> out;
  std::function<void(const LabeledTree&)> walk = [&](const LabeledTree& u) {
    if (u.label < gamma) return;
    out.insert(u);
    for (const auto& c : u.children) walk(c);
  };
  walk(t);
  return out;
}

/// s << t on trees: s sits strictly below the root of t on a path whose
/// vertices below the root all carry labels >= min(label s, label t).
inline bool ll(const LabeledTree& s, const LabeledTree& t) {
  const Ordinal& gamma = std::min(s.label, t.label);
  std::set<LabeledTree> reach;
  for (const auto& c : t.children) {
    const auto part = k_set(gamma, c);
    reach.insert(part.begin(), part.end());
  }
  return reach.count(s) != 0;
}

inline std::set<LabeledTree> proper_subtrees(const LabeledTree& t) {
  std::set<LabeledTree> out;
  std::function<void(const LabeledTree&)> walk = [&](const LabeledTree& u) {
    for (const auto& c : u.children) {
      out.insert(c);
      walk(c);
    }
  };
  walk(t);
  return out;
}

/// Longest << chain ending in t, by brute force over proper subtrees.
inline std::size_t rank(const LabeledTree& t) {
  std::size_t r = 0;
  for (const auto& s : proper_subtrees(t)) {
    if (ll(s, t)) r = std::max(r, rank(s) + 1);
  }
  return r;
}

/// Subsequence embedding by trying every increasing index map.
inline bool higman_leq(const kgap::FinitePoset& z, const std::vector<kgap::Element>& a,
                       const std::vector<kgap::Element>& b) {
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == a.size()) return true;
    for (std::size_t k = j; k < b.size(); ++k) {
      if (z.leq(a[i], b[k]) && go(i + 1, k + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

/// Random tree with up to `vertices` vertices and labels below `labels`.
inline LabeledTree random_tree(std::mt19937_64& rng, std::size_t vertices, std::uint64_t labels) {
  std::uniform_int_distribution<std::uint64_t> label(0, labels - 1);
  std::function<LabeledTree(std::size_t)> grow = [&](std::size_t budget) {
    std::vector<LabeledTree> kids;
    std::size_t left = budget - 1;
    while (left > 0 && rng() % 3 != 0) {
      const std::size_t take = 1 + rng() % left;
      kids.push_back(grow(take));
      left -= take;
    }
    return LabeledTree(Ordinal::nat(label(rng)), std::move(kids));
  };
  return grow(1 + rng() % vertices);
}

}  // namespace oracle
