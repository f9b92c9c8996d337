#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "kgap/error.hpp"
#include "kgap/fixed_point.hpp"
#include "kgap/tree_gap.hpp"

using kgap::LabeledTree;
using kgap::Ordinal;

namespace {

LabeledTree T(const char* text) { return LabeledTree::parse(text); }

std::vector<Ordinal> nats(std::uint64_t n) {
  std::vector<Ordinal> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Ordinal::nat(i));
  return out;
}

// Classical infimum-preserving tree embedding for unlabeled trees: s goes
// into a child of t, or roots match and the children of s go injectively
// into distinct children of t.
bool kruskal_leq(const LabeledTree& s, const LabeledTree& t) {
  for (const auto& c : t.children) {
    if (kruskal_leq(s, c)) return true;
  }
  if (s.children.size() > t.children.size()) return false;
  std::vector<std::size_t> perm(t.children.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s.children.size() && ok; ++i) {
      ok = kruskal_leq(s.children[i], t.children[perm[i]]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(GapLeq, Examples) {
  const std::vector<std::tuple<const char*, const char*, bool>> cases{
      {"0[]", "0[]", true},
      {"1[]", "0[]", false},
      {"2[2[]]", "2[0[2[]]]", false},
      {"0[0[]]", "0[1[]]", true},
  };
  for (const auto& [s, t, expected] : cases) {
    EXPECT_EQ(kgap::gap_leq(T(s), T(t)), expected) << s << " " << t;
    EXPECT_EQ(kgap::gap_leq_oracle(T(s), T(t)), expected) << s << " " << t;
  }
}

TEST(GapLeqOracle, Trivial) {
  EXPECT_TRUE(kgap::gap_leq_oracle(T("1[]"), T("2[]")));
  EXPECT_FALSE(kgap::gap_leq_oracle(T("0[0[]]"), T("0[]")));
  EXPECT_FALSE(kgap::gap_leq_oracle(T("0[0[],0[]]"), T("0[0[0[]]]")));
}

TEST(GapLeqOracle, SizeLimit) {
  std::vector<LabeledTree> kids(kgap::kOracleMaxVertices, T("0[]"));
  const LabeledTree big(Ordinal::nat(0), kids);
  try {
    kgap::FlatTree::from(big);
    FAIL();
  } catch (const kgap::Error& e) {
    EXPECT_EQ(e.code(), kgap::Errc::size_limit_exceeded);
  }
}

TEST(LabeledTreeText, RoundTripAndErrors) {
  for (const char* text : {"0[]", "2[0[2[]]]", "1[0[],0[]]", "w*1[0[]]"}) {
    EXPECT_EQ(T(text).to_string(), text);
  }
  EXPECT_EQ(T("1[2[],0[]]").to_string(), "1[0[],2[]]");
  try {
    T("2[[");
    FAIL();
  } catch (const kgap::ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(T("2"), kgap::ParseError);
  EXPECT_THROW(T("2[]x"), kgap::ParseError);
}

TEST(TreeTerm, Examples) {
  kgap::TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  const auto x = store.kappa(Ordinal::nat(0), {});
  EXPECT_EQ(kgap::tree_to_term(store, T("0[]")), x);
  const auto y = kgap::tree_to_term(store, T("1[0[],0[]]"));
  EXPECT_EQ(y, store.kappa(Ordinal::nat(1), {0, {x, x}}));
  EXPECT_EQ(kgap::term_to_tree(store, y), T("1[0[],0[]]"));

  kgap::TermStore oneplus(kgap::make_dilator("oneplus"), Ordinal::nat(3));
  EXPECT_THROW(kgap::tree_to_term(oneplus, T("0[]")), kgap::Error);
}

class SmallTrees : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto labels = nats(3);
    trees_ = kgap::enumerate_trees(labels, 4);
  }
  static std::vector<LabeledTree> trees_;
};
std::vector<LabeledTree> SmallTrees::trees_;

TEST_F(SmallTrees, EnumerationIsSortedAndUnique) {
  ASSERT_FALSE(trees_.empty());
  for (std::size_t i = 1; i < trees_.size(); ++i) {
    const auto a = trees_[i - 1].vertex_count();
    const auto b = trees_[i].vertex_count();
    EXPECT_TRUE(a < b || (a == b && trees_[i - 1] < trees_[i]));
  }
  for (const auto& t : trees_) EXPECT_LE(t.vertex_count(), 4u);
}

TEST_F(SmallTrees, TermRoundTrip) {
  kgap::TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  for (const auto& t : trees_) EXPECT_EQ(kgap::term_to_tree(store, kgap::tree_to_term(store, t)), t);
}

TEST_F(SmallTrees, ThreeWayAgreementAndAntisymmetry) {
  kgap::TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  kgap::GapDecider decider;
  std::vector<kgap::TermId> ids;
  for (const auto& t : trees_) ids.push_back(kgap::tree_to_term(store, t));
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    for (std::size_t j = 0; j < trees_.size(); ++j) {
      const bool expected = kgap::gap_leq_oracle(trees_[i], trees_[j]);
      ASSERT_EQ(decider.leq(trees_[i], trees_[j]), expected)
          << trees_[i].to_string() << " " << trees_[j].to_string();
      ASSERT_EQ(store.leq(ids[i], ids[j]), expected);
      if (i != j && expected) ASSERT_FALSE(kgap::gap_leq_oracle(trees_[j], trees_[i]));
    }
  }
}

TEST(SingleLabel, AgreesWithClassicalEmbedding) {
  const auto labels = nats(1);
  const auto trees = kgap::enumerate_trees(labels, 6);
  kgap::GapDecider decider;
  for (const auto& s : trees) {
    for (const auto& t : trees) {
      ASSERT_EQ(decider.leq(s, t), kruskal_leq(s, t)) << s.to_string() << " " << t.to_string();
    }
  }
}

}  // namespace
