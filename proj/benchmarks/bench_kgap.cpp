#include <benchmark/benchmark.h>

#include <random>

#include "kgap/fixed_point.hpp"
#include "kgap/gap_order.hpp"
#include "kgap/min_bad.hpp"
#include "kgap/tree_gap.hpp"

namespace {

std::vector<kgap::Ordinal> nats(std::uint64_t n) {
  std::vector<kgap::Ordinal> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(kgap::Ordinal::nat(i));
  return out;
}

void BM_EnumerateTerms(benchmark::State& state) {
  const auto labels = nats(3);
  for (auto _ : state) {
    kgap::TermStore store(kgap::make_dilator("multiset"), kgap::Ordinal::nat(3));
    auto terms = kgap::enumerate_terms(store, labels, state.range(0), 2);
    benchmark::DoNotOptimize(terms.data());
  }
}
BENCHMARK(BM_EnumerateTerms)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

// All pairs of the fragment from a cold memo.
void BM_TermLeqAllPairs(benchmark::State& state) {
  const auto labels = nats(3);
  std::size_t pairs = 0;
  for (auto _ : state) {
    kgap::TermStore store(kgap::make_dilator("multiset"), kgap::Ordinal::nat(3));
    const auto terms = kgap::enumerate_terms(store, labels, state.range(0), 2);
    std::size_t related = 0;
    for (auto s : terms) {
      for (auto t : terms) related += store.leq(s, t);
    }
    benchmark::DoNotOptimize(related);
    pairs = terms.size() * terms.size();
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}
BENCHMARK(BM_TermLeqAllPairs)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

std::vector<kgap::LabeledTree> trees(std::size_t vertices) {
  const auto labels = nats(3);
  return kgap::enumerate_trees(labels, vertices);
}

void BM_GapDeciderAllPairs(benchmark::State& state) {
  const auto all = trees(state.range(0));
  for (auto _ : state) {
    kgap::GapDecider decider;
    std::size_t related = 0;
    for (const auto& s : all) {
      for (const auto& t : all) related += decider.leq(s, t);
    }
    benchmark::DoNotOptimize(related);
  }
  state.counters["trees"] = static_cast<double>(all.size());
}
BENCHMARK(BM_GapDeciderAllPairs)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_OracleAllPairs(benchmark::State& state) {
  const auto all = trees(state.range(0));
  std::vector<kgap::FlatTree> flat;
  for (const auto& t : all) flat.push_back(kgap::FlatTree::from(t));
  for (auto _ : state) {
    std::size_t related = 0;
    for (const auto& s : flat) {
      for (const auto& t : flat) related += kgap::gap_leq_oracle(s, t);
    }
    benchmark::DoNotOptimize(related);
  }
  state.counters["trees"] = static_cast<double>(all.size());
}
BENCHMARK(BM_OracleAllPairs)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GapAxioms(benchmark::State& state) {
  const auto labels = nats(3);
  kgap::TermStore store(kgap::make_dilator("multiset"), kgap::Ordinal::nat(3));
  const auto terms = kgap::enumerate_terms(store, labels, 7, 2);
  for (auto _ : state) {
    const kgap::GapFragment fragment(store, terms);
    auto v = kgap::check_gap_axioms(fragment, state.range(0));
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_GapAxioms)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BetaMinimalBranch(benchmark::State& state) {
  const auto labels = nats(3);
  kgap::TermStore store(kgap::make_dilator("multiset"), kgap::Ordinal::nat(3));
  const auto pool = kgap::enumerate_terms(store, labels, 5, 2);
  std::mt19937_64 rng(1);
  const auto tree = kgap::random_prefix_tree(pool, 5, 50, rng);
  const bool brute = state.range(0) != 0;
  for (auto _ : state) {
    auto g = brute ? kgap::brute_min_branch(store, tree, kgap::Ordinal::nat(1), 5)
                   : kgap::beta_minimal_branch(store, tree, kgap::Ordinal::nat(1), 5);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_BetaMinimalBranch)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
