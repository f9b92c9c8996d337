#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kgap/function_ref.hpp"
#include "kgap/violation.hpp"

namespace kgap {

/// Opaque element identifier. Terms of a fixed point double as elements.
using Element = std::uint32_t;

using ElementOrder = function_ref<bool(Element, Element)>;

/// Explicit finite order: a sorted element set with a dense relation matrix.
/// Nothing about the relation is assumed; `validate_poset` checks the axioms.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Elements are sorted and deduplicated; the relation is sampled from `leq`.
  FinitePoset(std::vector<Element> elements, ElementOrder leq);

  /// Exactly the listed pairs are related; nothing is closed under anything.
  static FinitePoset from_pairs(std::vector<Element> elements,
                                std::span<const std::pair<Element, Element>> pairs);
  /// 0 < 1 < ... < n-1.
  static FinitePoset chain(std::size_t n);
  /// n pairwise incomparable elements 0..n-1.
  static FinitePoset antichain(std::size_t n);

  std::span<const Element> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element e) const;
  std::optional<std::size_t> index_of(Element e) const;

  /// Precondition: both elements belong to the poset.
  bool leq(Element a, Element b) const;
  bool leq_at(std::size_t i, std::size_t j) const { return relation_[i * elements_.size() + j] != 0; }

  std::vector<std::pair<Element, Element>> related_pairs() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<Element> elements_;
  std::vector<std::uint8_t> relation_;
};

/// Reflexivity, antisymmetry and transitivity, each failure with its witness.
std::vector<Violation> validate_poset(const FinitePoset& p);

/// Total function from the domain's elements into the codomain's elements.
class OrderMap {
 public:
  /// `images[i]` is the image of `domain.elements()[i]`. Throws
  /// Error(invalid_argument) if an image lies outside the codomain.
  OrderMap(FinitePoset domain, FinitePoset codomain, std::vector<Element> images);

  static OrderMap identity(const FinitePoset& p);
  /// Inclusion of `sub` into `super`; `sub` must be a subset.
  static OrderMap inclusion(const FinitePoset& sub, const FinitePoset& super);

  const FinitePoset& domain() const { return domain_; }
  const FinitePoset& codomain() const { return codomain_; }
  std::span<const Element> images() const { return images_; }
  Element operator()(Element x) const;
  std::vector<Element> range() const;

 private:
  FinitePoset domain_;
  FinitePoset codomain_;
  std::vector<Element> images_;
};

/// g after f. Requires f.codomain() == g.domain().
OrderMap compose(const OrderMap& g, const OrderMap& f);

/// f(x) <= f(x') implies x <= x'.
bool is_quasi_embedding(const OrderMap& f);
/// Order reflecting and order preserving.
bool is_embedding(const OrderMap& f);

/// Every x in a lies below some y in b.
bool leq_fin(std::span<const Element> a, std::span<const Element> b, ElementOrder leq);
bool leq_fin(std::span<const Element> a, std::span<const Element> b, const FinitePoset& p);

/// Induced suborder on s (s must be a subset of p's elements).
FinitePoset restrict(const FinitePoset& p, std::span<const Element> s);

/// Every partial order on {0..n-1} for n <= max_size, in a fixed order.
std::vector<FinitePoset> all_posets(std::size_t max_size);

/// All quasi embeddings from x into y.
std::vector<OrderMap> all_quasi_embeddings(const FinitePoset& x, const FinitePoset& y);

/// {"elements": [...], "leq": [[a,b], ...]}; every related pair is listed.
nlohmann::json to_json(const FinitePoset& p);
/// Reads the format of `to_json`. Reflexive pairs are implied and may be
/// omitted from "leq".
FinitePoset poset_from_json(const nlohmann::json& j);

/// Whether there is an injective f : [0,m) -> [0,n) with edge(i, f(i)) for all i.
bool has_injective_assignment(std::size_t m, std::size_t n,
                              function_ref<bool(std::size_t, std::size_t)> edge);

}  // namespace kgap
