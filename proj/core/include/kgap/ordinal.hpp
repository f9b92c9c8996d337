#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgap {

/// Ordinal below epsilon_0 in Cantor normal form.
///
/// The value is the sum of `w^exponent * coefficient` over `terms()`, with
/// exponents strictly decreasing and coefficients positive. The empty sum is 0.
/// Finite ordinals are a single term with exponent 0.
///
/// Text syntax: terms joined by `+`. A finite term is its decimal value; an
/// infinite term is `w*c` (exponent 1), `w^n*c` (finite exponent n) or
/// `w^(E)*c` (infinite exponent E). Zero is `0`. The printer always emits this
/// canonical form; the parser also accepts `w`, `w^E` without a coefficient
/// and `w^w` for the exponent omega.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  /// Throws Error(invalid_argument) unless the terms form a valid normal form.
  static Ordinal from_terms(std::vector<Term> terms);

  static Ordinal parse(std::string_view text);
  /// Parses the longest ordinal prefix of `text` starting at `pos` and
  /// advances `pos` past it. Errors report 1-based columns of `text`.
  static Ordinal parse_prefix(std::string_view text, std::size_t& pos);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const;
  bool is_finite() const;
  /// The value as a natural number if finite.
  std::optional<std::uint64_t> finite_value() const;
  /// Nesting depth of exponents: 0 for finite ordinals, 1 below w^w, ...
  std::size_t exponent_depth() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Cmp { LT, EQ, GT };

Cmp ord_compare(const Ordinal& a, const Ordinal& b);

/// w * a.
Ordinal ord_omega_times(const Ordinal& a);

/// a + n for a natural number n.
Ordinal ord_add_nat(const Ordinal& a, std::uint64_t n);

/// All ordinals whose normal form has exponent nesting depth at most
/// `max_depth`, at most `max_terms` terms per sum and coefficients at most
/// `max_coefficient`. Sorted ascending.
std::vector<Ordinal> enumerate_ordinals(std::size_t max_depth, std::size_t max_terms,
                                        std::uint64_t max_coefficient);

struct OrdinalHash {
  std::size_t operator()(const Ordinal& a) const { return a.hash(); }
};

}  // namespace kgap
