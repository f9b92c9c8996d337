#include "kgap/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "kgap/dilator.hpp"
#include "kgap/error.hpp"
#include "kgap/fixed_point.hpp"
#include "kgap/gap_order.hpp"
#include "kgap/min_bad.hpp"
#include "kgap/term_io.hpp"
#include "kgap/tree_gap.hpp"

namespace kgap {

std::uint64_t SuiteResult::stat(const std::string& key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) return v;
  }
  return 0;
}

namespace {

constexpr std::size_t kKeptViolations = 50;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  ~Recorder() { r_.stats.emplace_back("violations", total_); }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void fail(std::string law, std::string witness) {
    ++total_;
    if (r_.violations.size() < kKeptViolations) {
      r_.violations.push_back({std::move(law), std::move(witness)});
    }
  }
  void add(const std::vector<Violation>& vs) {
    for (const auto& v : vs) fail(v.law, v.witness);
  }
  std::uint64_t total() const { return total_; }

 private:
  SuiteResult& r_;
  std::uint64_t total_ = 0;
};

std::vector<Ordinal> nat_labels(std::uint64_t n) {
  std::vector<Ordinal> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Ordinal::nat(i));
  return out;
}

std::shared_ptr<const Dilator> multiset() { return make_dilator("multiset"); }

struct Fragment {
  std::unique_ptr<TermStore> store;
  std::vector<TermId> terms;
};

// Multiset dilator, labels {0,1,2}, budget 2.
Fragment main_fragment(bool quick) {
  Fragment f;
  f.store = std::make_unique<TermStore>(multiset(), Ordinal::nat(3));
  const auto labels = nat_labels(3);
  f.terms = enumerate_terms(*f.store, labels, quick ? 5 : 7, 2);
  return f;
}

std::string pair_text(const TermStore& store, TermId a, TermId b) {
  return format_term(store, a) + " , " + format_term(store, b);
}

std::string ids_to_terms(const TermStore& store, const std::string& witness) {
  std::string out;
  std::size_t start = 0;
  while (start <= witness.size()) {
    const std::size_t comma = std::min(witness.find(',', start), witness.size());
    const std::string part = witness.substr(start, comma - start);
    if (!out.empty()) out += " , ";
    try {
      out += format_term(store, static_cast<TermId>(std::stoul(part)));
    } catch (const std::exception&) {
      out += part;
    }
    start = comma + 1;
  }
  return out;
}

void oracle_equivalence(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  const auto labels = nat_labels(3);
  const auto trees = enumerate_trees(labels, o.quick ? 4 : 6);
  std::vector<FlatTree> flat;
  flat.reserve(trees.size());
  GapDecider decider;
  std::vector<GapDecider::Id> ids;
  TermStore store(multiset(), Ordinal::nat(3));
  std::vector<TermId> terms;
  for (const auto& t : trees) {
    flat.push_back(FlatTree::from(t));
    ids.push_back(decider.intern(t));
    terms.push_back(tree_to_term(store, t));
    if (term_to_tree(store, terms.back()) != t) rec.fail("round_trip", t.to_string());
  }
  std::uint64_t related = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const bool recursive = decider.leq(ids[i], ids[j]);
      const bool oracle = gap_leq_oracle(flat[i], flat[j]);
      const bool term = store.leq(terms[i], terms[j]);
      related += recursive ? 1 : 0;
      if (recursive != oracle || recursive != term) {
        rec.fail("agreement", trees[i].to_string() + " , " + trees[j].to_string() +
                                  " gap=" + std::to_string(recursive) +
                                  " oracle=" + std::to_string(oracle) +
                                  " term=" + std::to_string(term));
      }
      ++r.checked;
    }
  }
  r.stats.emplace_back("trees", trees.size());
  r.stats.emplace_back("related_pairs", related);
}

void partial_order(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  const Fragment f = main_fragment(o.quick);
  const TermStore& store = *f.store;
  std::vector<std::pair<Element, Element>> pairs;
  for (const TermId a : f.terms) {
    for (const TermId b : f.terms) {
      if (store.leq(a, b)) pairs.emplace_back(a, b);
    }
  }
  if (o.inject_fault == "antisym") {
    const auto strict = std::find_if(pairs.begin(), pairs.end(),
                                     [](const auto& p) { return p.first != p.second; });
    if (strict != pairs.end()) pairs.emplace_back(strict->second, strict->first);
  }
  const FinitePoset relation = FinitePoset::from_pairs(f.terms, pairs);
  for (const auto& v : validate_poset(relation)) rec.fail(v.law, ids_to_terms(store, v.witness));
  const std::uint64_t n = f.terms.size();
  r.checked = n + n * n + n * n * n;
  r.stats.emplace_back("fragment", n);
  r.stats.emplace_back("related_pairs", pairs.size());
}

void height_monotonicity(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  const Fragment f = main_fragment(o.quick);
  const TermStore& store = *f.store;
  std::uint64_t via_clause_ii = 0;
  std::function<void(const LeqTrace&)> walk = [&](const LeqTrace& t) {
    if (t.clause_ii) {
      ++via_clause_ii;
      if (!(store.node(t.s).height < store.node(t.t).height)) {
        rec.fail("strict_height", pair_text(store, t.s, t.t));
      }
    }
    for (const auto& c : t.children) walk(c);
  };
  std::uint64_t comparable = 0;
  for (const TermId s : f.terms) {
    for (const TermId t : f.terms) {
      const LeqTrace trace = store.explain(s, t);
      if (trace.result != store.leq(s, t)) rec.fail("trace_consistency", pair_text(store, s, t));
      if (!trace.result) continue;
      ++comparable;
      if (!(store.node(s).height <= store.node(t).height)) {
        rec.fail("height", pair_text(store, s, t));
      }
      walk(trace);
    }
  }
  rec.add(check_height_criterion(store, f.terms));
  r.checked = comparable;
  r.stats.emplace_back("fragment", f.terms.size());
  r.stats.emplace_back("comparable_pairs", comparable);
  r.stats.emplace_back("clause_ii_steps", via_clause_ii);
}

void fixed_point_equivalence(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  Fragment f = main_fragment(o.quick);
  TermStore& store = *f.store;
  const Dilator& d = store.dilator();
  const FinitePoset order = fragment_order(store, f.terms);
  for (const TermId t : f.terms) {
    const auto [label, sigma] = kappa_inverse(store, t);
    if (kappa(store, label, sigma) != t) rec.fail("kappa_round_trip", format_term(store, t));
  }
  for (const TermId x : f.terms) {
    const auto [alpha, sigma] = kappa_inverse(store, x);
    const Element self[] = {x};
    for (const TermId y : f.terms) {
      const auto [beta, tau] = kappa_inverse(store, y);
      const auto tau_support = d.support(tau);
      const bool rhs = alpha <= beta &&
                       (d.leq(order, sigma, tau) || leq_fin(self, tau_support, order));
      if (rhs != store.leq(x, y)) rec.fail("equivalence", pair_text(store, x, y));
      ++r.checked;
    }
  }
  r.stats.emplace_back("fragment", f.terms.size());
}

void gap_axioms(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  const Fragment f = main_fragment(o.quick);
  const GapFragment gap(*f.store, f.terms);
  const GapModel model = gap_model(gap);
  rec.add(check_gap_axioms(model, o.chain_length));
  const auto gammas = nat_labels(3);
  rec.add(check_k_set_laws(*f.store, f.terms, gammas));
  std::uint64_t ll_pairs = 0;
  for (const auto v : model.ll) ll_pairs += v;
  const std::uint64_t n = f.terms.size();
  r.checked = n * n;
  r.stats.emplace_back("fragment", n);
  r.stats.emplace_back("ll_pairs", ll_pairs);
  r.stats.emplace_back("chain_length", o.chain_length);
}

std::vector<LabelMap> monotone_maps(std::uint64_t from, std::uint64_t to) {
  std::vector<LabelMap> out;
  std::vector<std::uint64_t> image;
  std::function<void(std::uint64_t)> go = [&](std::uint64_t next) {
    if (image.size() == from) {
      LabelMap m;
      for (std::uint64_t i = 0; i < from; ++i) m.emplace(Ordinal::nat(i), Ordinal::nat(image[i]));
      out.push_back(std::move(m));
      return;
    }
    for (std::uint64_t v = next; v < to; ++v) {
      image.push_back(v);
      go(v + 1);
      image.pop_back();
    }
  };
  go(0);
  return out;
}

void embedding(SuiteResult& r, const SuiteOptions&) {
  Recorder rec(r);
  TermStore source(multiset(), Ordinal::nat(2));
  TermStore middle(multiset(), Ordinal::nat(3));
  TermStore target(multiset(), Ordinal::nat(4));
  const auto labels = nat_labels(2);
  const auto terms = enumerate_terms(source, labels, 5, 2);

  const auto identity = monotone_maps(2, 2).front();
  TermStore copy(multiset(), Ordinal::nat(2));
  for (const TermId t : terms) {
    if (format_term(copy, embed_into_larger(identity, source, t, copy)) != format_term(source, t)) {
      rec.fail("identity", format_term(source, t));
    }
  }

  const auto first = monotone_maps(2, 3);
  const auto second = monotone_maps(3, 4);
  for (const LabelMap& i_map : first) {
    std::vector<TermId> image;
    for (const TermId t : terms) {
      image.push_back(embed_into_larger(i_map, source, t, middle));
      if (q_label(middle, image.back()) != i_map.at(q_label(source, t))) {
        rec.fail("root_label", format_term(source, t));
      }
    }
    for (std::size_t a = 0; a < terms.size(); ++a) {
      for (std::size_t b = 0; b < terms.size(); ++b) {
        if (source.leq(terms[a], terms[b]) != middle.leq(image[a], image[b])) {
          rec.fail("embedding", pair_text(source, terms[a], terms[b]));
        }
        ++r.checked;
      }
    }
    for (const LabelMap& j_map : second) {
      LabelMap composite;
      for (const auto& [k, v] : i_map) composite.emplace(k, j_map.at(v));
      for (std::size_t a = 0; a < terms.size(); ++a) {
        const TermId twice = embed_into_larger(j_map, middle, image[a], target);
        const TermId once = embed_into_larger(composite, source, terms[a], target);
        if (twice != once) rec.fail("composition", format_term(source, terms[a]));
        ++r.checked;
      }
    }
  }
  r.stats.emplace_back("terms", terms.size());
  r.stats.emplace_back("label_maps", first.size());
}

void higman(SuiteResult& r, const SuiteOptions&) {
  Recorder rec(r);
  const std::pair<const char*, FinitePoset> zs[] = {{"antichain", FinitePoset::antichain(2)},
                                                     {"chain", FinitePoset::chain(2)}};
  for (const auto& [name, z] : zs) {
    TermStore store(std::make_shared<LabeledConsDilator>(z), Ordinal::nat(1));
    std::vector<ZSequence> seqs{{}};
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      if (seqs[k].size() == 4) continue;
      for (const Element e : z.elements()) {
        ZSequence next = seqs[k];
        next.push_back(e);
        seqs.push_back(std::move(next));
      }
    }
    std::vector<TermId> images;
    for (const auto& s : seqs) {
      images.push_back(higman_to_term(store, s));
      if (term_to_higman(store, images.back()) != s) rec.fail("inverse", name);
    }
    std::vector<TermId> distinct = images;
    std::sort(distinct.begin(), distinct.end());
    if (std::unique(distinct.begin(), distinct.end()) != distinct.end()) rec.fail("injective", name);

    // Terms of length <= 31 are exactly the images of sequences of length <= 4.
    const Ordinal zero[] = {Ordinal{}};
    auto fragment = enumerate_terms(store, zero, 31, 1);
    std::sort(fragment.begin(), fragment.end());
    if (fragment != distinct) rec.fail("surjective", name);
    for (const TermId t : fragment) {
      if (higman_to_term(store, term_to_higman(store, t)) != t) rec.fail("inverse", name);
    }

    for (std::size_t a = 0; a < seqs.size(); ++a) {
      for (std::size_t b = 0; b < seqs.size(); ++b) {
        if (higman_leq(z, seqs[a], seqs[b]) != store.leq(images[a], images[b])) {
          rec.fail("order", std::string(name) + ": " + pair_text(store, images[a], images[b]));
        }
        ++r.checked;
      }
    }
    r.stats.emplace_back(std::string("sequences_") + name, seqs.size());
  }
}

void omega_nu(SuiteResult& r, const SuiteOptions&) {
  Recorder rec(r);
  TermStore store(make_dilator("oneplus"), Ordinal::nat(3));
  std::vector<LabelSequence> seqs{{}};
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    if (seqs[k].size() == 4) continue;
    for (std::uint64_t v = 0; v < 3; ++v) {
      const Ordinal label = Ordinal::nat(v);
      if (!seqs[k].empty() && seqs[k].back() < label) continue;
      LabelSequence next = seqs[k];
      next.push_back(label);
      seqs.push_back(std::move(next));
    }
  }
  std::vector<TermId> images;
  for (const auto& s : seqs) images.push_back(omega_nu_embed(store, s));
  std::uint64_t comparable = 0;
  for (std::size_t a = 0; a < seqs.size(); ++a) {
    for (std::size_t b = 0; b < seqs.size(); ++b) {
      if (store.leq(images[a], images[b])) {
        ++comparable;
        if (!omega_nu_leq(seqs[a], seqs[b])) {
          rec.fail("reflection", pair_text(store, images[a], images[b]));
        }
      }
      ++r.checked;
    }
  }
  r.stats.emplace_back("sequences", seqs.size());
  r.stats.emplace_back("comparable_images", comparable);
}

void beta_minimality(SuiteResult& r, const SuiteOptions& o) {
  Recorder rec(r);
  TermStore store(multiset(), Ordinal::nat(3));
  const auto labels = nat_labels(3);
  const auto pool = enumerate_terms(store, labels, 5, 2);
  std::mt19937_64 rng(o.seed);
  const std::size_t count = o.quick ? 20 : o.prefix_trees;
  std::size_t most_branches = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t depth = k % 6;
    const Ordinal beta = Ordinal::nat((k / 6) % 3);
    const std::size_t cap = 1 + static_cast<std::size_t>(rng() % 50);
    const PrefixTree tree = random_prefix_tree(pool, depth, cap, rng);
    auto branches = tree.branches(depth);
    most_branches = std::max(most_branches, branches.size());
    const std::string where = "tree " + std::to_string(k);
    if (branches.size() > 50) rec.fail("branch_cap", where);
    if (!tree.is_perfect(depth)) rec.fail("perfect", where);

    const FiniteSeq greedy = beta_minimal_branch(store, tree, beta, depth);
    const FiniteSeq brute = brute_min_branch(store, tree, beta, depth);
    if (greedy != brute) rec.fail("greedy_vs_brute", where);
    if (smaller_branch(store, tree, beta, depth, greedy)) rec.fail("certificate", where);
    for (const auto& b : branches) {
      if (angle_beta(store, b, b, beta)) rec.fail("irreflexive", where);
    }

    std::shuffle(branches.begin(), branches.end(), rng);
    const PrefixTree shuffled = PrefixTree::from_branches(branches);
    if (beta_minimal_branch(store, shuffled, beta, depth) != greedy) {
      rec.fail("determinism", where);
    }
    ++r.checked;
  }
  r.stats.emplace_back("prefix_trees", count);
  r.stats.emplace_back("most_branches", most_branches);
}

void dilator_laws(SuiteResult& r, const SuiteOptions&) {
  Recorder rec(r);
  const std::shared_ptr<const Dilator> lawful[] = {
      make_dilator("multiset"), make_dilator("oneplus"),
      std::make_shared<LabeledConsDilator>(FinitePoset::chain(2))};
  for (const auto& d : lawful) {
    for (const auto& v : check_dilator_laws(*d, 3, 2)) rec.fail(d->name() + ":" + v.law, v.witness);
    ++r.checked;
  }
  const auto broken = check_dilator_laws(*make_dilator("multiset-relaxed"), 3, 2);
  if (broken.empty()) rec.fail("negative_control", "multiset-relaxed passed every law");
  ++r.checked;
  r.stats.emplace_back("negative_control_violations", broken.size());
}

struct SuiteDef {
  const char* id;
  const char* title;
  void (*run)(SuiteResult&, const SuiteOptions&);
};

constexpr SuiteDef kSuites[] = {
    {"oracle_equivalence", "gap_leq = oracle = term_leq on trees", oracle_equivalence},
    {"partial_order", "term order is a partial order", partial_order},
    {"height_monotonicity", "comparison never lowers height", height_monotonicity},
    {"fixed_point_equivalence", "kappa satisfies the fixed-point equivalence",
     fixed_point_equivalence},
    {"gap_axioms", "gap-order axioms and K-set laws", gap_axioms},
    {"embedding", "label embeddings preserve and reflect the order", embedding},
    {"higman", "cons terms are isomorphic to Higman sequences", higman},
    {"omega_nu", "decreasing sequences embed order-reflectingly", omega_nu},
    {"beta_minimality", "greedy beta-minimal branch is the minimum", beta_minimality},
    {"dilator_laws", "dilator laws and negative control", dilator_laws},
};

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.id);
  return out;
}

SuiteResult run_suite(const std::string& id, const SuiteOptions& options) {
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (id != kSuites[i].id) continue;
    SuiteResult r;
    r.number = static_cast<int>(i + 1);
    r.id = id;
    r.title = kSuites[i].title;
    const auto start = std::chrono::steady_clock::now();
    kSuites[i].run(r, options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.stat("violations") == 0;
    return r;
  }
  throw Error(Errc::invalid_argument, "unknown suite " + id);
}

}  // namespace kgap
