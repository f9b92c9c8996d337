#include "kgap/min_bad.hpp"

#include <algorithm>
#include <functional>

#include "kgap/error.hpp"
#include "kgap/gap_order.hpp"
#include "kgap/term_io.hpp"

namespace kgap {

FiniteSeq::FiniteSeq(std::vector<SeqEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1].index < entries_[i].index)) {
      throw Error(Errc::invalid_argument, "sequence indices must strictly increase");
    }
  }
}

FiniteSeq FiniteSeq::below(std::uint64_t k) const {
  FiniteSeq out;
  for (const auto& e : entries_) {
    if (e.index >= k) break;
    out.entries_.push_back(e);
  }
  return out;
}

FiniteSeq FiniteSeq::prefix(std::size_t n) const {
  FiniteSeq out;
  out.entries_.assign(entries_.begin(),
                      entries_.begin() + static_cast<std::ptrdiff_t>(std::min(n, entries_.size())));
  return out;
}

FiniteSeq FiniteSeq::extended(SeqEntry entry) const {
  std::vector<SeqEntry> next = entries_;
  next.push_back(entry);
  return FiniteSeq(std::move(next));
}

bool is_bad(const TermStore& store, const FiniteSeq& g) {
  const auto& e = g.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (store.leq(e[i].value, e[j].value)) return false;
    }
  }
  return true;
}

bool is_regular(const TermStore& store, const FiniteSeq& g) {
  const auto& e = g.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (!(q_label(store, e[i - 1].value) <= q_label(store, e[i].value))) return false;
  }
  return true;
}

bool angle_beta(const TermStore& store, const FiniteSeq& g0, const FiniteSeq& g1,
                const Ordinal& beta) {
  const auto& m0 = g0.entries();
  const auto& m1 = g1.entries();
  for (const auto& e : m0) {
    const bool present = std::any_of(m1.begin(), m1.end(),
                                     [&](const SeqEntry& f) { return f.index == e.index; });
    if (!present) return false;
  }
  for (const auto& at : m1) {
    const std::uint64_t k = at.index;
    if (g0.below(k) != g1.below(k)) continue;
    const auto next = std::find_if(m0.begin(), m0.end(),
                                   [k](const SeqEntry& e) { return e.index >= k; });
    if (next == m0.end()) continue;
    if (p_beta(beta, store, next->value) < p_beta(beta, store, at.value)) return true;
  }
  return false;
}

PrefixTree PrefixTree::from_sequences(std::vector<FiniteSeq> sequences) {
  PrefixTree tree;
  tree.sequences_.insert(FiniteSeq{});
  tree.sequences_.insert(sequences.begin(), sequences.end());
  for (const auto& s : tree.sequences_) {
    if (!s.empty() && !tree.contains(s.prefix(s.size() - 1))) {
      throw Error(Errc::not_prefix_closed,
                  "sequence of length " + std::to_string(s.size()) + " lacks its prefix");
    }
  }
  return tree;
}

PrefixTree PrefixTree::from_branches(std::span<const FiniteSeq> branches) {
  PrefixTree tree;
  tree.sequences_.insert(FiniteSeq{});
  for (const auto& b : branches) {
    for (std::size_t n = 1; n <= b.size(); ++n) tree.sequences_.insert(b.prefix(n));
  }
  return tree;
}

std::vector<SeqEntry> PrefixTree::extensions(const FiniteSeq& prefix) const {
  std::vector<SeqEntry> out;
  for (auto it = sequences_.upper_bound(prefix); it != sequences_.end(); ++it) {
    if (it->size() <= prefix.size() || it->prefix(prefix.size()) != prefix) break;
    if (it->size() == prefix.size() + 1) out.push_back(it->entries().back());
  }
  return out;
}

bool PrefixTree::is_perfect(std::size_t depth) const {
  return std::all_of(sequences_.begin(), sequences_.end(), [&](const FiniteSeq& s) {
    return s.size() >= depth || !extensions(s).empty();
  });
}

std::vector<FiniteSeq> PrefixTree::branches(std::size_t depth) const {
  std::vector<FiniteSeq> out;
  for (const auto& s : sequences_) {
    if (s.size() == depth) out.push_back(s);
  }
  return out;
}

std::strong_ordering step_compare(const TermStore& store, const Ordinal& beta, const SeqEntry& a,
                                  const SeqEntry& b) {
  if (auto c = p_beta(beta, store, a.value) <=> p_beta(beta, store, b.value); c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  return store.canonical_compare(a.value, b.value);
}

FiniteSeq beta_minimal_branch(const TermStore& store, const PrefixTree& tree,
                              const Ordinal& beta, std::size_t depth) {
  if (!tree.is_perfect(depth)) {
    throw Error(Errc::not_perfect, "tree is not perfect up to depth " + std::to_string(depth));
  }
  FiniteSeq current;
  while (current.size() < depth) {
    const auto options = tree.extensions(current);
    const auto best = std::min_element(
        options.begin(), options.end(), [&](const SeqEntry& a, const SeqEntry& b) {
          return step_compare(store, beta, a, b) < 0;
        });
    current = current.extended(*best);
  }
  return current;
}

FiniteSeq brute_min_branch(const TermStore& store, const PrefixTree& tree, const Ordinal& beta,
                           std::size_t depth) {
  if (!tree.is_perfect(depth)) {
    throw Error(Errc::not_perfect, "tree is not perfect up to depth " + std::to_string(depth));
  }
  const auto all = tree.branches(depth);
  auto less = [&](const FiniteSeq& a, const FiniteSeq& b) {
    for (std::size_t i = 0; i < depth; ++i) {
      const auto c = step_compare(store, beta, a.entries()[i], b.entries()[i]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  return *std::min_element(all.begin(), all.end(), less);
}

std::optional<FiniteSeq> smaller_branch(const TermStore& store, const PrefixTree& tree,
                                        const Ordinal& beta, std::size_t depth,
                                        const FiniteSeq& g) {
  for (const auto& other : tree.branches(depth)) {
    if (angle_beta(store, other, g, beta)) return other;
  }
  return std::nullopt;
}

std::optional<std::vector<TermId>> find_antichain(const TermStore& store,
                                                  std::span<const TermId> fragment,
                                                  std::size_t size, bool exhaustive) {
  std::vector<TermId> order(fragment.begin(), fragment.end());
  store.sort_canonically(order);
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<TermId> chosen;
  auto compatible = [&](TermId t) {
    return std::none_of(chosen.begin(), chosen.end(), [&](TermId c) {
      return store.leq(c, t) || store.leq(t, c);
    });
  };
  if (!exhaustive) {
    for (const TermId t : order) {
      if (chosen.size() == size) break;
      if (compatible(t)) chosen.push_back(t);
    }
    if (chosen.size() == size) return chosen;
    return std::nullopt;
  }
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (chosen.size() == size) return true;
    for (std::size_t i = from; i + (size - chosen.size()) <= order.size(); ++i) {
      if (!compatible(order[i])) continue;
      chosen.push_back(order[i]);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(0)) return chosen;
  return std::nullopt;
}

PrefixTree random_prefix_tree(std::span<const TermId> pool, std::size_t depth,
                              std::size_t max_branches, std::mt19937_64& rng) {
  if (pool.empty()) throw Error(Errc::invalid_argument, "empty term pool");
  std::vector<FiniteSeq> leaves;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::uint64_t> gap(1, 2);
  std::function<void(const FiniteSeq&, std::size_t)> grow = [&](const FiniteSeq& at,
                                                                std::size_t budget) {
    if (at.size() == depth) {
      leaves.push_back(at);
      return;
    }
    const std::uint64_t base = at.empty() ? 0 : at.entries().back().index + 1;
    std::uniform_int_distribution<std::size_t> fan(1, std::min<std::size_t>(3, budget));
    const std::size_t children = fan(rng);
    for (std::size_t c = 0; c < children; ++c) {
      const SeqEntry e{base + gap(rng) - 1, pool[pick(rng)]};
      grow(at.extended(e), std::max<std::size_t>(1, budget / children));
    }
  };
  grow(FiniteSeq{}, std::max<std::size_t>(1, max_branches));
  return PrefixTree::from_branches(leaves);
}

namespace {

FiniteSeq seq_from_json(TermStore& store, const nlohmann::json& j) {
  std::vector<SeqEntry> entries;
  for (const auto& e : j) {
    entries.push_back({e.at("index").get<std::uint64_t>(),
                       parse_term(store, e.at("term").get<std::string>())});
  }
  return FiniteSeq(std::move(entries));
}

}  // namespace

PrefixTree prefix_tree_from_json(TermStore& store, const nlohmann::json& j) {
  std::vector<FiniteSeq> seqs;
  const bool closed = j.is_object() && j.contains("sequences");
  try {
    const auto& list = closed ? j.at("sequences") : j.at("branches");
    if (!list.is_array()) throw Error(Errc::invalid_argument, "sequence list must be an array");
    for (const auto& s : list) seqs.push_back(seq_from_json(store, s));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed prefix tree: ") + e.what());
  }
  return closed ? PrefixTree::from_sequences(std::move(seqs)) : PrefixTree::from_branches(seqs);
}

nlohmann::json seq_to_json(const TermStore& store, const FiniteSeq& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : g.entries()) {
    out.push_back({{"index", e.index}, {"term", format_term(store, e.value)}});
  }
  return out;
}

nlohmann::json prefix_tree_to_json(const TermStore& store, const PrefixTree& tree) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const auto& s : tree.sequences()) seqs.push_back(seq_to_json(store, s));
  return {{"sequences", std::move(seqs)}};
}

}  // namespace kgap
