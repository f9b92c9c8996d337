#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "kgap/fixed_point.hpp"
#include "kgap/gap_order.hpp"
#include "kgap/min_bad.hpp"
#include "kgap/term_io.hpp"
#include "kgap/tree_gap.hpp"
#include "oracles.hpp"

using kgap::LabeledTree;
using kgap::Ordinal;
using kgap::TermId;
using kgap::TermStore;

namespace {

constexpr int kTrials = 400;

Ordinal N(std::uint64_t n) { return Ordinal::nat(n); }

std::vector<Ordinal> nats(std::uint64_t n) {
  std::vector<Ordinal> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(N(i));
  return out;
}

Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  std::vector<Ordinal::Term> terms;
  std::vector<Ordinal> exps;
  const int count = static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    exps.push_back(depth == 0 ? N(rng() % 4) : random_ordinal(rng, depth - 1));
  }
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (auto& e : exps) terms.push_back({std::move(e), 1 + rng() % 5});
  return Ordinal::from_terms(std::move(terms));
}

TEST(Properties, OrdinalTextRoundTripAndOracleSum) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kTrials; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    const Ordinal b = random_ordinal(rng, 2);
    ASSERT_EQ(Ordinal::parse(a.to_string()), a);
    const Ordinal sum = oracle::add(a, b);
    ASSERT_LE(a, sum);
    ASSERT_LE(b, sum);
    ASSERT_EQ(a < b, b > a);
    if (a < b) ASSERT_LT(kgap::ord_omega_times(a), kgap::ord_omega_times(b));
  }
}

TEST(Properties, GapLeqMatchesOracleBeyondExhaustiveRange) {
  std::mt19937_64 rng(2);
  kgap::GapDecider decider;
  TermStore store(kgap::make_dilator("multiset"), N(3));
  int positive = 0;
  for (int i = 0; i < kTrials; ++i) {
    const LabeledTree s = oracle::random_tree(rng, 7, 3);
    const LabeledTree t = oracle::random_tree(rng, 10, 3);
    const bool expected = kgap::gap_leq_oracle(s, t);
    positive += expected;
    ASSERT_EQ(decider.leq(s, t), expected) << s.to_string() << " " << t.to_string();
    ASSERT_EQ(store.leq(kgap::tree_to_term(store, s), kgap::tree_to_term(store, t)), expected);
  }
  EXPECT_GT(positive, kTrials / 20);
  EXPECT_LT(positive, kTrials - kTrials / 20);
}

TEST(Properties, TransitivityOnRandomTriples) {
  std::mt19937_64 rng(3);
  kgap::GapDecider decider;
  int chains = 0;
  for (int i = 0; i < 4 * kTrials; ++i) {
    const LabeledTree a = oracle::random_tree(rng, 4, 2);
    const LabeledTree b = oracle::random_tree(rng, 7, 2);
    const LabeledTree c = oracle::random_tree(rng, 10, 2);
    if (decider.leq(a, b) && decider.leq(b, c)) {
      ++chains;
      ASSERT_TRUE(decider.leq(a, c)) << a.to_string() << " " << b.to_string() << " " << c.to_string();
    }
  }
  EXPECT_GT(chains, 0);
}

TEST(Properties, HeightAndRankDropAlongLl) {
  std::mt19937_64 rng(4);
  TermStore store(kgap::make_dilator("multiset"), N(3));
  for (int i = 0; i < kTrials / 4; ++i) {
    const TermId t = kgap::tree_to_term(store, oracle::random_tree(rng, 10, 3));
    for (TermId s : kgap::ll_predecessors(store, t)) {
      ASSERT_TRUE(kgap::ll(store, s, t));
      ASSERT_LT(store.node(s).height, store.node(t).height);
      ASSERT_LT(kgap::rank(store, s), kgap::rank(store, t));
    }
  }
}

TEST(Properties, LeqImpliesHeightBound) {
  std::mt19937_64 rng(5);
  TermStore store(kgap::make_dilator("multiset"), N(3));
  for (int i = 0; i < kTrials; ++i) {
    const TermId s = kgap::tree_to_term(store, oracle::random_tree(rng, 6, 3));
    const TermId t = kgap::tree_to_term(store, oracle::random_tree(rng, 9, 3));
    if (!store.leq(s, t)) continue;
    ASSERT_LE(store.node(s).height, store.node(t).height);
    const auto trace = store.explain(s, t);
    if (trace.clause_ii && !trace.clause_i) ASSERT_LT(store.node(s).height, store.node(t).height);
  }
}

TEST(Properties, BadAndRegularAreClosedUnderSubsequences) {
  std::mt19937_64 rng(6);
  TermStore store(kgap::make_dilator("multiset"), N(3));
  const auto labels = nats(3);
  const auto pool = kgap::enumerate_terms(store, labels, 5, 2);
  for (int i = 0; i < kTrials; ++i) {
    std::vector<kgap::SeqEntry> entries;
    std::uint64_t index = 0;
    const std::size_t len = 1 + rng() % 5;
    for (std::size_t k = 0; k < len; ++k) {
      index += 1 + rng() % 3;
      entries.push_back({index, pool[rng() % pool.size()]});
    }
    const kgap::FiniteSeq g(entries);
    std::vector<kgap::SeqEntry> sub;
    for (const auto& e : entries) {
      if (rng() % 2) sub.push_back(e);
    }
    const kgap::FiniteSeq h(sub);
    if (kgap::is_bad(store, g)) ASSERT_TRUE(kgap::is_bad(store, h));
    if (kgap::is_regular(store, g)) ASSERT_TRUE(kgap::is_regular(store, h));
    for (std::uint64_t beta = 0; beta < 3; ++beta) ASSERT_FALSE(kgap::angle_beta(store, g, g, N(beta)));
  }
}

TEST(Properties, AngleBetaAcyclicOnBranches) {
  std::mt19937_64 rng(7);
  TermStore store(kgap::make_dilator("multiset"), N(3));
  const auto labels = nats(3);
  const auto pool = kgap::enumerate_terms(store, labels, 5, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t depth = 1 + trial % 4;
    const auto tree = kgap::random_prefix_tree(pool, depth, 12, rng);
    const auto branches = tree.branches(depth);
    const Ordinal beta = N(trial % 3);
    const std::size_t n = branches.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        reach[i][j] = kgap::angle_beta(store, branches[i], branches[j], beta);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) ASSERT_FALSE(reach[i][i]);
  }
}

TEST(Properties, EmbeddingsCompose) {
  std::mt19937_64 rng(8);
  TermStore source(kgap::make_dilator("multiset"), N(2));
  TermStore middle(kgap::make_dilator("multiset"), N(3));
  TermStore target(kgap::make_dilator("multiset"), N(5));
  TermStore direct(kgap::make_dilator("multiset"), N(5));
  const kgap::LabelMap f{{N(0), N(0)}, {N(1), N(2)}};
  const kgap::LabelMap g{{N(0), N(1)}, {N(1), N(3)}, {N(2), N(4)}};
  const kgap::LabelMap gf{{N(0), N(1)}, {N(1), N(4)}};
  for (int i = 0; i < kTrials / 4; ++i) {
    const TermId t = kgap::tree_to_term(source, oracle::random_tree(rng, 8, 2));
    const TermId two_step = kgap::embed_into_larger(
        g, middle, kgap::embed_into_larger(f, source, t, middle), target);
    const TermId one_step = kgap::embed_into_larger(gf, source, t, direct);
    ASSERT_EQ(kgap::format_term(target, two_step), kgap::format_term(direct, one_step));
  }
}

TEST(Properties, EnumerationIsDeterministic) {
  const auto labels = nats(3);
  TermStore a(kgap::make_dilator("multiset"), N(3));
  TermStore b(kgap::make_dilator("multiset"), N(3));
  // Warm b with unrelated terms so ids differ between the stores.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) kgap::tree_to_term(b, oracle::random_tree(rng, 8, 3));
  const auto ta = kgap::enumerate_terms(a, labels, 7, 2);
  const auto tb = kgap::enumerate_terms(b, labels, 7, 2);
  ASSERT_EQ(ta.size(), tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    ASSERT_EQ(kgap::format_term(a, ta[i]), kgap::format_term(b, tb[i]));
  }
}

TEST(Properties, ConcurrentLeqMatchesSequential) {
  const auto labels = nats(3);
  TermStore shared(kgap::make_dilator("multiset"), N(3));
  TermStore fresh(kgap::make_dilator("multiset"), N(3));
  const auto terms = kgap::enumerate_terms(shared, labels, 7, 2);
  const auto reference = kgap::enumerate_terms(fresh, labels, 7, 2);
  const std::size_t n = terms.size();
  std::vector<std::uint8_t> results(n * n);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += 4) {
        for (std::size_t j = 0; j < n; ++j) results[i * n + j] = shared.leq(terms[i], terms[j]);
      }
    });
  }
  for (auto& t : workers) t.join();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ASSERT_EQ(results[i * n + j] != 0, fresh.leq(reference[i], reference[j]));
    }
  }
}

}  // namespace
