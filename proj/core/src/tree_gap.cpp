#include "kgap/tree_gap.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

#include "kgap/error.hpp"
#include "kgap/poset.hpp"

namespace kgap {

LabeledTree::LabeledTree(Ordinal root, std::vector<LabeledTree> kids)
    : label(std::move(root)), children(std::move(kids)) {
  std::sort(children.begin(), children.end());
}

std::strong_ordering operator<=>(const LabeledTree& a, const LabeledTree& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  const std::size_t common = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

std::size_t LabeledTree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

std::string LabeledTree::to_string() const {
  std::string out = label.to_string() + "[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += ',';
    out += children[i].to_string();
  }
  out += ']';
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabeledTree parse_all() {
    LabeledTree t = parse();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_ + 1, "unexpected trailing input");
    return t;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) throw ParseError(pos_ + 1, std::string("expected '") + c + "'");
    ++pos_;
  }

  LabeledTree parse() {
    skip_space();
    Ordinal label = Ordinal::parse_prefix(text_, pos_);
    expect('[');
    std::vector<LabeledTree> kids;
    skip_space();
    if (peek() == ']') {
      ++pos_;
      return LabeledTree(std::move(label));
    }
    for (;;) {
      kids.push_back(parse());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return LabeledTree(std::move(label), std::move(kids));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledTree LabeledTree::parse(std::string_view text) { return TreeParser(text).parse_all(); }

std::size_t GapDecider::NodeHash::operator()(const Node& n) const {
  std::size_t h = n.label.hash();
  for (const Id c : n.children) h = h * 1000003U ^ c;
  return h;
}

GapDecider::Id GapDecider::intern(const LabeledTree& tree) {
  Node node{tree.label, {}};
  node.children.reserve(tree.children.size());
  for (const auto& c : tree.children) node.children.push_back(intern(c));
  std::sort(node.children.begin(), node.children.end());
  if (const auto it = index_.find(node); it != index_.end()) return it->second;
  const auto id = static_cast<Id>(nodes_.size());
  nodes_.push_back(node);
  index_.emplace(std::move(node), id);
  return id;
}

bool GapDecider::leq(Id s, Id t) {
  if (const auto cached = memo_.get(s, t)) return *cached;
  const Node& a = nodes_[s];
  const Node& b = nodes_[t];
  bool result = false;
  if (a.label <= b.label) {
    result = has_injective_assignment(a.children.size(), b.children.size(),
                                      [&](std::size_t i, std::size_t j) {
                                        return leq(a.children[i], b.children[j]);
                                      });
    if (!result) {
      result = std::any_of(b.children.begin(), b.children.end(),
                           [&](Id c) { return leq(s, c); });
    }
  }
  memo_.put(s, t, result);
  return result;
}

bool gap_leq(const LabeledTree& s, const LabeledTree& t) {
  GapDecider decider;
  return decider.leq(s, t);
}

FlatTree FlatTree::from(const LabeledTree& tree) {
  FlatTree f;
  const std::size_t n = tree.vertex_count();
  if (n > kOracleMaxVertices) {
    throw Error(Errc::size_limit_exceeded, "oracle handles at most " +
                                               std::to_string(kOracleMaxVertices) +
                                               " vertices, got " + std::to_string(n));
  }
  f.labels.reserve(n);
  std::function<void(const LabeledTree&, int)> visit = [&](const LabeledTree& node, int parent) {
    const auto v = static_cast<std::size_t>(f.size++);
    f.parent[v] = static_cast<std::int8_t>(parent);
    f.labels.push_back(node.label);
    if (const auto small = node.label.finite_value()) {
      f.small_label[v] = *small;
    } else {
      f.small_labels = false;
    }
    f.ancestors[v] = static_cast<std::uint16_t>(1U << v);
    if (parent >= 0) {
      f.ancestors[v] |= f.ancestors[static_cast<std::size_t>(parent)];
      f.children[static_cast<std::size_t>(parent)] |= static_cast<std::uint16_t>(1U << v);
    }
    for (const auto& c : node.children) visit(c, static_cast<int>(v));
  };
  visit(tree, -1);
  for (std::size_t v = f.size; v-- > 0;) {
    f.subtree[v] |= static_cast<std::uint16_t>(1U << v);
    if (f.parent[v] >= 0) f.subtree[static_cast<std::size_t>(f.parent[v])] |= f.subtree[v];
  }
  return f;
}

namespace {

class OracleSearch {
 public:
  OracleSearch(const FlatTree& s, const FlatTree& t) : s_(s), t_(t) {
    for (std::size_t u = 0; u < s.size; ++u) {
      std::uint16_t ok = 0;
      for (std::size_t w = 0; w < t.size; ++w) {
        if (label_ge(w, u)) ok |= static_cast<std::uint16_t>(1U << w);
      }
      dominating_[u] = ok;
    }
  }

  bool run() {
    if (s_.size == 0 || t_.size == 0) return false;
    if (s_.size > t_.size) return false;
    return assign(0);
  }

 private:
  // label of t-vertex w >= label of s-vertex u
  bool label_ge(std::size_t w, std::size_t u) const {
    if (s_.small_labels && t_.small_labels) return t_.small_label[w] >= s_.small_label[u];
    return s_.labels[u] <= t_.labels[w];
  }

  bool assign(std::size_t u) {
    if (u == s_.size) return validate();
    if (u == 0) {
      for (std::size_t v = 0; v < t_.size; ++v) {
        if ((t_.ancestors[v] & ~dominating_[0]) != 0) continue;
        image_[0] = static_cast<std::uint8_t>(v);
        branches_[0] = 0;
        if (assign(1)) return true;
      }
      return false;
    }
    const auto p = static_cast<std::size_t>(s_.parent[u]);
    const std::size_t ep = image_[p];
    const auto below = static_cast<std::uint16_t>(t_.subtree[ep] & ~(1U << ep));
    for (std::uint32_t rest = below; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      const auto branch = static_cast<std::uint16_t>(t_.children[ep] & t_.ancestors[w]);
      if ((branches_[p] & branch) != 0) continue;
      const auto path = static_cast<std::uint16_t>(t_.ancestors[w] & ~t_.ancestors[ep]);
      if ((path & ~dominating_[u]) != 0) continue;
      image_[u] = static_cast<std::uint8_t>(w);
      branches_[u] = 0;
      branches_[p] |= branch;
      const bool found = assign(u + 1);
      branches_[p] &= static_cast<std::uint16_t>(~branch);
      if (found) return true;
    }
    return false;
  }

  static std::size_t deepest(std::uint16_t common) {
    return static_cast<std::size_t>(15 - std::countl_zero(common));
  }

  // Re-checks a complete map against the conditions, walking parent links.
  bool validate() const {
    const std::size_t n = s_.size;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (image_[u] == image_[v]) return false;
      }
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t meet_s = deepest(s_.ancestors[u] & s_.ancestors[v]);
        const std::size_t meet_t = deepest(t_.ancestors[image_[u]] & t_.ancestors[image_[v]]);
        if (image_[meet_s] != meet_t) return false;
      }
    }
    for (int w = image_[0]; w >= 0; w = t_.parent[static_cast<std::size_t>(w)]) {
      if (!label_ge(static_cast<std::size_t>(w), 0)) return false;
    }
    for (std::size_t u = 1; u < n; ++u) {
      const int stop = image_[static_cast<std::size_t>(s_.parent[u])];
      int w = image_[u];
      for (; w >= 0 && w != stop; w = t_.parent[static_cast<std::size_t>(w)]) {
        if (!label_ge(static_cast<std::size_t>(w), u)) return false;
      }
      if (w != stop) return false;
    }
    return true;
  }

  const FlatTree& s_;
  const FlatTree& t_;
  std::array<std::uint16_t, kOracleMaxVertices> dominating_{};
  std::array<std::uint8_t, kOracleMaxVertices> image_{};
  std::array<std::uint16_t, kOracleMaxVertices> branches_{};
};

}  // namespace

bool gap_leq_oracle(const FlatTree& s, const FlatTree& t) { return OracleSearch(s, t).run(); }

bool gap_leq_oracle(const LabeledTree& s, const LabeledTree& t) {
  return gap_leq_oracle(FlatTree::from(s), FlatTree::from(t));
}

TermId tree_to_term(TermStore& store, const LabeledTree& tree) {
  if (store.dilator().kind() != DilatorKind::multiset) {
    throw Error(Errc::wrong_dilator, "trees correspond to terms of the multiset dilator");
  }
  DilatorElement sigma;
  sigma.slots.reserve(tree.children.size());
  for (const auto& c : tree.children) sigma.slots.push_back(tree_to_term(store, c));
  return store.kappa(tree.label, sigma);
}

LabeledTree term_to_tree(const TermStore& store, TermId t) {
  if (store.dilator().kind() != DilatorKind::multiset) {
    throw Error(Errc::wrong_dilator, "trees correspond to terms of the multiset dilator");
  }
  const TermNode& n = store.node(t);
  std::vector<LabeledTree> kids;
  kids.reserve(n.payload.slots.size());
  for (const Element slot : n.payload.slots) kids.push_back(term_to_tree(store, slot));
  return LabeledTree(n.label, std::move(kids));
}

std::vector<LabeledTree> enumerate_trees(std::span<const Ordinal> labels,
                                         std::size_t max_vertices) {
  std::vector<LabeledTree> all;  // ascending vertex count
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> forest;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t available = all.size();
    std::vector<LabeledTree> level;
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from,
                                                             std::size_t remaining) {
      if (remaining == 0) {
        std::vector<LabeledTree> kids;
        kids.reserve(forest.size());
        for (const std::size_t i : forest) kids.push_back(all[i]);
        for (const Ordinal& label : labels) level.emplace_back(label, kids);
        return;
      }
      for (std::size_t i = from; i < available && sizes[i] <= remaining; ++i) {
        forest.push_back(i);
        grow(i, remaining - sizes[i]);
        forest.pop_back();
      }
    };
    grow(0, n - 1);
    std::sort(level.begin(), level.end());
    for (auto& t : level) {
      all.push_back(std::move(t));
      sizes.push_back(n);
    }
  }
  return all;
}

}  // namespace kgap
