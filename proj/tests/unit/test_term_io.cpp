#include <gtest/gtest.h>

#include "kgap/error.hpp"
#include "kgap/fixed_point.hpp"
#include "kgap/term_io.hpp"

using kgap::Ordinal;
using kgap::TermId;
using kgap::TermStore;

namespace {

std::vector<Ordinal> nats(std::uint64_t n) {
  std::vector<Ordinal> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Ordinal::nat(i));
  return out;
}

TEST(TermText, MultisetExamples) {
  TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  const TermId x = store.kappa(Ordinal::nat(0), {});
  const TermId y = store.kappa(Ordinal::nat(1), {0, {x, x}});
  EXPECT_EQ(kgap::format_term(store, x), "0*()");
  EXPECT_EQ(kgap::format_term(store, y), "1*(0*(),0*())");
  EXPECT_EQ(kgap::parse_term(store, "1*(0*(),0*())"), y);
  EXPECT_EQ(kgap::parse_term(store, " 1 * ( 0*() , 0*() ) "), y);
}

TEST(TermText, OnePlusAndConsExamples) {
  TermStore oneplus(kgap::make_dilator("oneplus"), Ordinal::nat(3));
  const TermId z = oneplus.kappa(Ordinal::nat(0), kgap::OnePlusDilator::zero());
  const TermId s = oneplus.kappa(Ordinal::nat(2), kgap::OnePlusDilator::succ(z));
  EXPECT_EQ(kgap::format_term(oneplus, z), "0*<0>");
  EXPECT_EQ(kgap::format_term(oneplus, s), "2*<1+ 0*<0>>");
  EXPECT_EQ(kgap::parse_term(oneplus, "2*<1+ 0*<0>>"), s);

  TermStore cons(std::make_shared<kgap::LabeledConsDilator>(kgap::FinitePoset::antichain(2)),
                 Ordinal::nat(1));
  const TermId e = cons.kappa(Ordinal::nat(0), kgap::LabeledConsDilator::zero());
  const TermId p = cons.kappa(Ordinal::nat(0), kgap::LabeledConsDilator::pair(1, e));
  EXPECT_EQ(kgap::format_term(cons, p), "0*<1,0*<0>>");
  EXPECT_EQ(kgap::parse_term(cons, "0*<1,0*<0>>"), p);
  EXPECT_THROW(kgap::parse_term(cons, "0*<5,0*<0>>"), kgap::Error);
}

TEST(TermText, RoundTripOverFragments) {
  TermStore multiset(kgap::make_dilator("multiset"), Ordinal::nat(3));
  const auto labels = nats(3);
  for (TermId t : kgap::enumerate_terms(multiset, labels, 7, 2)) {
    ASSERT_EQ(kgap::parse_term(multiset, kgap::format_term(multiset, t)), t);
  }
  TermStore oneplus(kgap::make_dilator("oneplus"), Ordinal::nat(3));
  for (TermId t : kgap::enumerate_terms(oneplus, labels, 9, 2)) {
    ASSERT_EQ(kgap::parse_term(oneplus, kgap::format_term(oneplus, t)), t);
  }
  TermStore cons(std::make_shared<kgap::LabeledConsDilator>(kgap::FinitePoset::chain(2)),
                 Ordinal::nat(1));
  const auto zero = nats(1);
  for (TermId t : kgap::enumerate_terms(cons, zero, 15, 1)) {
    ASSERT_EQ(kgap::parse_term(cons, kgap::format_term(cons, t)), t);
  }
}

TEST(TermText, Errors) {
  TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  try {
    kgap::parse_term(store, "1*(0*()");
    FAIL();
  } catch (const kgap::ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(kgap::parse_term(store, ""), kgap::ParseError);
  EXPECT_THROW(kgap::parse_term(store, "1*()x"), kgap::ParseError);
  EXPECT_THROW(kgap::parse_term(store, "1(0*())"), kgap::ParseError);
  try {
    kgap::parse_term(store, "3*()");
    FAIL();
  } catch (const kgap::ParseError&) {
    FAIL() << "label bound violations are not parse errors";
  } catch (const kgap::Error& e) {
    EXPECT_EQ(e.code(), kgap::Errc::label_out_of_range);
  }
}

TEST(TermJson, Shape) {
  TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  const TermId y = kgap::parse_term(store, "1*(0*(),0*())");
  const auto j = kgap::term_to_json(store, y);
  EXPECT_EQ(j.at("label"), "1");
  EXPECT_EQ(j.at("length"), 3);
  EXPECT_EQ(j.at("height"), 1);
  EXPECT_EQ(j.at("payload").at("children").size(), 2u);
  EXPECT_EQ(j.at("payload").at("children")[0].at("label"), "0");
}

TEST(HasseDot, CoverEdgesOnly) {
  TermStore store(kgap::make_dilator("multiset"), Ordinal::nat(3));
  const std::vector<TermId> chain{store.kappa(Ordinal::nat(0), {}), store.kappa(Ordinal::nat(1), {}),
                                  store.kappa(Ordinal::nat(2), {})};
  const auto dot = kgap::hasse_dot(store, chain);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n2"), std::string::npos);
  EXPECT_EQ(dot.find("n0 -> n2"), std::string::npos);
}

}  // namespace
