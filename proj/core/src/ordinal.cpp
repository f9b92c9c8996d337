#include "kgap/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "kgap/error.hpp"

namespace kgap {

namespace {

bool is_valid(const std::vector<Ordinal::Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b)
    throw Error(Errc::invalid_argument, "ordinal coefficient overflow");
  return a + b;
}

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    const std::size_t start = pos_;
    terms.push_back(parse_term());
    while (peek() == '+' && starts_term(pos_ + 1)) {
      ++pos_;
      const std::size_t term_start = pos_;
      Ordinal::Term term = parse_term();
      if (!terms.empty() && !(term.exponent < terms.back().exponent)) {
        throw ParseError(term_start + 1,
                         "ordinal terms must have strictly decreasing exponents");
      }
      terms.push_back(std::move(term));
    }
    // A lone `0` is zero; zero may not appear inside a longer sum.
    if (terms.size() == 1 && terms[0].coefficient == 0) return Ordinal{};
    for (const auto& term : terms) {
      if (term.coefficient == 0) throw ParseError(start + 1, "zero term inside an ordinal sum");
    }
    return Ordinal::from_terms(std::move(terms));
  }

  std::size_t pos() const { return pos_; }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool starts_term(std::size_t at) const {
    if (at >= text_.size()) return false;
    const char c = text_[at];
    return c == 'w' || std::isdigit(static_cast<unsigned char>(c));
  }

  std::uint64_t parse_nat() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_ + 1, "expected a natural number");
    }
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (UINT64_MAX - digit) / 10) throw ParseError(pos_ + 1, "number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Ordinal::Term parse_term() {
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent = Ordinal::nat(1);
      if (peek() == '^') {
        ++pos_;
        if (peek() == '(') {
          ++pos_;
          exponent = parse_sum();
          if (peek() != ')') throw ParseError(pos_ + 1, "expected ')'");
          ++pos_;
        } else if (peek() == 'w') {
          ++pos_;
          exponent = Ordinal::omega();
        } else {
          exponent = Ordinal::nat(parse_nat());
        }
        if (exponent.is_zero()) throw ParseError(pos_, "exponent 0 must be written as a number");
      }
      std::uint64_t coefficient = 1;
      if (peek() == '*' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        const std::size_t at = pos_;
        coefficient = parse_nat();
        if (coefficient == 0) throw ParseError(at + 1, "coefficient must be positive");
      }
      return {std::move(exponent), coefficient};
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      return {Ordinal{}, parse_nat()};
    }
    throw ParseError(pos_ + 1, "expected an ordinal");
  }

  std::string_view text_;
  std::size_t pos_;
};

}  // namespace

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal result;
  if (n > 0) result.terms_.push_back({Ordinal{}, n});
  return result;
}

Ordinal Ordinal::omega() { return omega_power(nat(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal{};
  Ordinal result;
  result.terms_.push_back({exponent, coefficient});
  return result;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  if (!is_valid(terms)) {
    throw Error(Errc::invalid_argument,
                "ordinal terms must have strictly decreasing exponents and positive coefficients");
  }
  Ordinal result;
  result.terms_ = std::move(terms);
  return result;
}

Ordinal Ordinal::parse(std::string_view text) {
  std::size_t pos = 0;
  Ordinal result = parse_prefix(text, pos);
  if (pos != text.size()) throw ParseError(pos + 1, "unexpected trailing input");
  return result;
}

Ordinal Ordinal::parse_prefix(std::string_view text, std::size_t& pos) {
  OrdinalParser parser(text, pos);
  Ordinal result = parser.parse_sum();
  pos = parser.pos();
  return result;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::optional<std::uint64_t> Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

std::size_t Ordinal::exponent_depth() const {
  std::size_t depth = 0;
  for (const auto& term : terms_) {
    if (!term.exponent.is_zero()) depth = std::max(depth, 1 + term.exponent.exponent_depth());
  }
  return depth;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += '+';
    const Term& term = terms_[i];
    if (term.exponent.is_zero()) {
      out += std::to_string(term.coefficient);
      continue;
    }
    out += 'w';
    if (term.exponent.is_finite()) {
      const std::uint64_t e = *term.exponent.finite_value();
      if (e != 1) out += '^' + std::to_string(e);
    } else {
      out += "^(" + term.exponent.to_string() + ")";
    }
    out += '*' + std::to_string(term.coefficient);
  }
  return out;
}

std::size_t Ordinal::hash() const {
  std::size_t seed = terms_.size();
  for (const auto& term : terms_) {
    seed ^= term.exponent.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= std::hash<std::uint64_t>{}(term.coefficient) + 0x9e3779b97f4a7c15ULL +
            (seed << 6) + (seed >> 2);
  }
  return seed;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Cmp ord_compare(const Ordinal& a, const Ordinal& b) {
  const auto c = a <=> b;
  if (c < 0) return Cmp::LT;
  if (c > 0) return Cmp::GT;
  return Cmp::EQ;
}

Ordinal ord_omega_times(const Ordinal& a) {
  // w * (sum w^e_i c_i) = sum w^(1+e_i) c_i, and 1+e = e for infinite e.
  std::vector<Ordinal::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& term : a.terms()) {
    Ordinal exponent = term.exponent.is_finite()
                           ? Ordinal::nat(checked_add(*term.exponent.finite_value(), 1))
                           : term.exponent;
    terms.push_back({std::move(exponent), term.coefficient});
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal ord_add_nat(const Ordinal& a, std::uint64_t n) {
  if (n == 0) return a;
  std::vector<Ordinal::Term> terms = a.terms();
  if (!terms.empty() && terms.back().exponent.is_zero()) {
    terms.back().coefficient = checked_add(terms.back().coefficient, n);
  } else {
    terms.push_back({Ordinal{}, n});
  }
  return Ordinal::from_terms(std::move(terms));
}

std::vector<Ordinal> enumerate_ordinals(std::size_t max_depth, std::size_t max_terms,
                                        std::uint64_t max_coefficient) {
  // Exponents available at this depth: 0 plus every nonzero ordinal of
  // smaller depth.
  std::vector<Ordinal> exponents{Ordinal{}};
  if (max_depth > 0) {
    for (auto& e : enumerate_ordinals(max_depth - 1, max_terms, max_coefficient)) {
      if (!e.is_zero()) exponents.push_back(std::move(e));
    }
  }
  std::sort(exponents.begin(), exponents.end(), std::greater<>{});

  std::vector<Ordinal> out{Ordinal{}};
  std::vector<Ordinal::Term> current;
  std::function<void(std::size_t)> extend = [&](std::size_t next_exponent) {
    for (std::size_t i = next_exponent; i < exponents.size(); ++i) {
      for (std::uint64_t c = 1; c <= max_coefficient; ++c) {
        current.push_back({exponents[i], c});
        out.push_back(Ordinal::from_terms(current));
        if (current.size() < max_terms) extend(i + 1);
        current.pop_back();
      }
    }
  };
  if (max_terms > 0) extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kgap
