#include "kgap/term_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kgap/error.hpp"

namespace kgap {

namespace {

void format_into(const TermStore& store, TermId t, std::string& out) {
  const TermNode& n = store.node(t);
  out += n.label.to_string();
  out += '*';
  switch (store.dilator().kind()) {
    case DilatorKind::one_plus:
      if (n.payload.shape == OnePlusDilator::kZero) {
        out += "<0>";
      } else {
        out += "<1+ ";
        format_into(store, n.payload.slots.front(), out);
        out += '>';
      }
      return;
    case DilatorKind::labeled_cons:
      if (n.payload.shape == 0) {
        out += "<0>";
      } else {
        out += '<';
        out += std::to_string(LabeledConsDilator::z_of(n.payload));
        out += ',';
        format_into(store, n.payload.slots.front(), out);
        out += '>';
      }
      return;
    default: {
      // Slots grouped by canonical support position, each repeat written out.
      std::vector<TermId> children;
      for (const TermId s : n.canonical_support) {
        const auto copies = std::count(n.payload.slots.begin(), n.payload.slots.end(), s);
        children.insert(children.end(), static_cast<std::size_t>(copies), s);
      }
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += ',';
        format_into(store, children[i], out);
      }
      out += ')';
    }
  }
}

class TermParser {
 public:
  TermParser(TermStore& store, std::string_view text) : store_(store), text_(text) {}

  TermId parse_all() {
    const TermId t = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t natural() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > UINT32_MAX) fail("number too large");
      ++pos_;
    }
    return value;
  }

  TermId parse() {
    skip_space();
    const std::size_t label_at = pos_;
    Ordinal label = Ordinal::parse_prefix(text_, pos_);
    expect('*');
    DilatorElement sigma = parse_body();
    try {
      return store_.kappa(label, sigma);
    } catch (const Error& e) {
      if (e.code() == Errc::label_out_of_range) throw;
      throw ParseError(label_at + 1, e.what());
    }
  }

  DilatorElement parse_body() {
    skip_space();
    switch (store_.dilator().kind()) {
      case DilatorKind::one_plus: {
        expect('<');
        const std::uint64_t tag = natural();
        if (tag == 0) {
          expect('>');
          return OnePlusDilator::zero();
        }
        if (tag != 1) fail("expected 0 or 1+");
        expect('+');
        const TermId child = parse();
        expect('>');
        return OnePlusDilator::succ(child);
      }
      case DilatorKind::labeled_cons: {
        expect('<');
        const std::uint64_t z = natural();
        skip_space();
        if (peek() == '>' && z == 0) {
          ++pos_;
          return LabeledConsDilator::zero();
        }
        expect(',');
        const TermId child = parse();
        expect('>');
        return LabeledConsDilator::pair(static_cast<Element>(z), child);
      }
      default: {
        expect('(');
        DilatorElement sigma;
        skip_space();
        if (peek() == ')') {
          ++pos_;
          return sigma;
        }
        for (;;) {
          sigma.slots.push_back(parse());
          skip_space();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          expect(')');
          return sigma;
        }
      }
    }
  }

  TermStore& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_term(const TermStore& store, TermId t) {
  std::string out;
  format_into(store, t, out);
  return out;
}

TermId parse_term(TermStore& store, std::string_view text) {
  return TermParser(store, text).parse_all();
}

nlohmann::json term_to_json(const TermStore& store, TermId t) {
  const TermNode& n = store.node(t);
  nlohmann::json children = nlohmann::json::array();
  for (const Element slot : n.payload.slots) children.push_back(term_to_json(store, slot));
  return {{"label", n.label.to_string()},
          {"length", n.length},
          {"height", n.height},
          {"payload", {{"shape", n.payload.shape}, {"children", std::move(children)}}}};
}

std::string hasse_dot(const TermStore& store, std::span<const TermId> fragment) {
  std::ostringstream out;
  out << "digraph order {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_term(store, fragment[i]) << "\"];\n";
  }
  const std::size_t n = fragment.size();
  auto lt = [&](std::size_t a, std::size_t b) {
    return a != b && store.leq(fragment[a], fragment[b]);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (lt(a, c) && lt(c, b)) covered = false;
      }
      if (covered) out << "  n" << a << " -> n" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace kgap
