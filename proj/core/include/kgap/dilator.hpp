#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kgap/poset.hpp"
#include "kgap/violation.hpp"

namespace kgap {

/// An element of W(X): a dilator-specific shape tag plus the elements of X it
/// refers to. Maps act on the slots; the support is the set of slots.
///
/// Shapes per dilator:
///   multiset      shape 0, slots = entries in ascending order (repeats allowed)
///   oneplus       shape 0 is the symbol 0 (no slots); shape 1 is 1+x (slots {x})
///   cons over Z   shape 0 is the symbol 0; shape 1+z is the pair (z, x) (slots {x})
struct DilatorElement {
  std::uint32_t shape = 0;
  std::vector<Element> slots;

  friend bool operator==(const DilatorElement&, const DilatorElement&) = default;
  friend auto operator<=>(const DilatorElement&, const DilatorElement&) = default;
};

struct DilatorElementHash {
  std::size_t operator()(const DilatorElement& e) const;
};

enum class DilatorKind { multiset, one_plus, labeled_cons, other };

/// A normal PO-dilator restricted to finite orders.
///
/// The order of W(X) is decided from the order of X given pointwise, so callers
/// can compare elements over orders that are never materialized (the fixed
/// point compares payloads over a lazily computed union of supports).
class Dilator {
 public:
  virtual ~Dilator() = default;

  virtual std::string name() const = 0;
  virtual DilatorKind kind() const { return DilatorKind::other; }

  /// sigma <=_{W(X)} tau, where `leq` is the order of X.
  virtual bool leq(const DilatorElement& sigma, const DilatorElement& tau,
                   ElementOrder leq) const = 0;
  bool leq(const FinitePoset& x, const DilatorElement& sigma, const DilatorElement& tau) const;

  /// Sorted, duplicate-free set of referenced elements.
  virtual std::vector<Element> support(const DilatorElement& sigma) const;

  /// W(f) for a map given elementwise.
  DilatorElement map(const DilatorElement& sigma, function_ref<Element(Element)> f) const;
  DilatorElement apply_map(const OrderMap& f, const DilatorElement& sigma) const;

  /// Canonical representative (e.g. sorted multiset entries).
  virtual DilatorElement normalize(DilatorElement sigma) const { return sigma; }

  /// Whether `sigma` is a well-formed element over the given carrier.
  virtual bool is_element(const DilatorElement& sigma, std::span<const Element> carrier) const = 0;

  /// Elements of W(carrier) within the size budget, in ascending order.
  /// Only the multiset dilator is infinite on nonempty carriers and uses the
  /// budget (maximum total multiplicity); the others ignore it.
  virtual std::vector<DilatorElement> enumerate(std::span<const Element> carrier,
                                                std::size_t budget) const = 0;
};

/// Elements of W(x) within budget together with their order. The i-th
/// element of `elements` is element i of `order`.
struct AppliedOrder {
  std::vector<DilatorElement> elements;
  FinitePoset order;
};

AppliedOrder apply_order(const Dilator& d, const FinitePoset& x, std::size_t budget);

/// Finite multisets with the injective-domination order.
class MultisetDilator final : public Dilator {
 public:
  std::string name() const override { return "multiset"; }
  DilatorKind kind() const override { return DilatorKind::multiset; }
  bool leq(const DilatorElement& sigma, const DilatorElement& tau,
           ElementOrder leq) const override;
  using Dilator::leq;
  DilatorElement normalize(DilatorElement sigma) const override;
  bool is_element(const DilatorElement& sigma, std::span<const Element> carrier) const override;
  std::vector<DilatorElement> enumerate(std::span<const Element> carrier,
                                        std::size_t budget) const override;
};

/// Multiset order with the injectivity requirement dropped. Not a partial
/// order ([x] and [x,x] compare both ways); kept as a negative control for the
/// law checker.
class RelaxedMultisetDilator final : public Dilator {
 public:
  std::string name() const override { return "multiset-relaxed"; }
  bool leq(const DilatorElement& sigma, const DilatorElement& tau,
           ElementOrder leq) const override;
  using Dilator::leq;
  DilatorElement normalize(DilatorElement sigma) const override;
  bool is_element(const DilatorElement& sigma, std::span<const Element> carrier) const override;
  std::vector<DilatorElement> enumerate(std::span<const Element> carrier,
                                        std::size_t budget) const override;
};

/// W(X) = 1 + X. Only 0 <= 0 and 1+x <= 1+y for x <= y.
class OnePlusDilator final : public Dilator {
 public:
  static constexpr std::uint32_t kZero = 0;
  static constexpr std::uint32_t kSucc = 1;

  static DilatorElement zero() { return {kZero, {}}; }
  static DilatorElement succ(Element x) { return {kSucc, {x}}; }

  std::string name() const override { return "oneplus"; }
  DilatorKind kind() const override { return DilatorKind::one_plus; }
  bool leq(const DilatorElement& sigma, const DilatorElement& tau,
           ElementOrder leq) const override;
  using Dilator::leq;
  bool is_element(const DilatorElement& sigma, std::span<const Element> carrier) const override;
  std::vector<DilatorElement> enumerate(std::span<const Element> carrier,
                                        std::size_t budget) const override;
};

/// W[Z](X) = 1 + Z x X for a fixed finite order Z. Only 0 <= 0 and
/// (z,x) <= (z',x') for z <= z' and x <= x'.
class LabeledConsDilator final : public Dilator {
 public:
  explicit LabeledConsDilator(FinitePoset z_order);

  static DilatorElement zero() { return {0, {}}; }
  static DilatorElement pair(Element z, Element x) { return {z + 1, {x}}; }
  static Element z_of(const DilatorElement& sigma) { return sigma.shape - 1; }

  const FinitePoset& z_order() const { return z_order_; }

  std::string name() const override { return "cons"; }
  DilatorKind kind() const override { return DilatorKind::labeled_cons; }
  bool leq(const DilatorElement& sigma, const DilatorElement& tau,
           ElementOrder leq) const override;
  using Dilator::leq;
  bool is_element(const DilatorElement& sigma, std::span<const Element> carrier) const override;
  std::vector<DilatorElement> enumerate(std::span<const Element> carrier,
                                        std::size_t budget) const override;

 private:
  FinitePoset z_order_;
};

/// Elements of W(a) whose support is all of a.
std::vector<DilatorElement> trace_elements(const Dilator& d, const FinitePoset& a,
                                           std::size_t budget);

/// Factorization sigma = W(inclusion)(trace) with trace of full support over
/// the suborder on the support.
struct NormalForm {
  std::vector<Element> support;
  FinitePoset carrier;
  DilatorElement trace;
};

NormalForm normal_form(const Dilator& d, const FinitePoset& x, const DilatorElement& sigma);

/// Exhaustive check of the functor, support and normality laws over every
/// poset with at most `size_cap` elements and every quasi embedding between
/// them. Law names: poset, element, identity, morphism, composition,
/// embedding, naturality, support_condition, support_converse, normality.
std::vector<Violation> check_dilator_laws(const Dilator& d, std::size_t size_cap,
                                          std::size_t budget);

/// `multiset`, `oneplus`, or `cons` (which needs a Z order).
std::shared_ptr<const Dilator> make_dilator(const std::string& name);

}  // namespace kgap
