#include "kgap/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "kgap/error.hpp"

namespace kgap {

namespace {

std::vector<Element> sorted_unique(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<Element> elements, ElementOrder leq)
    : elements_(sorted_unique(std::move(elements))),
      relation_(elements_.size() * elements_.size(), 0) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      relation_[i * n + j] = leq(elements_[i], elements_[j]) ? 1 : 0;
    }
  }
}

FinitePoset FinitePoset::from_pairs(std::vector<Element> elements,
                                    std::span<const std::pair<Element, Element>> pairs) {
  FinitePoset p;
  p.elements_ = sorted_unique(std::move(elements));
  const std::size_t n = p.elements_.size();
  p.relation_.assign(n * n, 0);
  for (const auto& [a, b] : pairs) {
    const auto i = p.index_of(a);
    const auto j = p.index_of(b);
    if (!i || !j) throw Error(Errc::invalid_argument, "related pair names an unknown element");
    p.relation_[*i * n + *j] = 1;
  }
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<Element> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<Element>(i);
  return FinitePoset(std::move(xs), [](Element a, Element b) { return a <= b; });
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<Element> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<Element>(i);
  return FinitePoset(std::move(xs), [](Element a, Element b) { return a == b; });
}

bool FinitePoset::contains(Element e) const { return index_of(e).has_value(); }

std::optional<std::size_t> FinitePoset::index_of(Element e) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinitePoset::leq(Element a, Element b) const {
  const auto i = index_of(a);
  const auto j = index_of(b);
  if (!i || !j) throw Error(Errc::invalid_argument, "element not in poset");
  return leq_at(*i, *j);
}

std::vector<std::pair<Element, Element>> FinitePoset::related_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

std::vector<Violation> validate_poset(const FinitePoset& p) {
  std::vector<Violation> out;
  const auto xs = p.elements();
  const std::size_t n = xs.size();
  auto name = [&](std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i : idx) {
      os << (first ? "" : ",") << xs[i];
      first = false;
    }
    return os.str();
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq_at(i, i)) out.push_back({"reflexivity", name({i})});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq_at(i, j) && p.leq_at(j, i)) out.push_back({"antisymmetry", name({i, j})});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq_at(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq_at(j, k) && !p.leq_at(i, k)) {
          out.push_back({"transitivity", name({i, j, k})});
        }
      }
    }
  }
  return out;
}

OrderMap::OrderMap(FinitePoset domain, FinitePoset codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw Error(Errc::invalid_argument, "order map must assign one image per domain element");
  }
  for (Element y : images_) {
    if (!codomain_.contains(y)) throw Error(Errc::invalid_argument, "image outside codomain");
  }
}

OrderMap OrderMap::identity(const FinitePoset& p) {
  return OrderMap(p, p, std::vector<Element>(p.elements().begin(), p.elements().end()));
}

OrderMap OrderMap::inclusion(const FinitePoset& sub, const FinitePoset& super) {
  return OrderMap(sub, super, std::vector<Element>(sub.elements().begin(), sub.elements().end()));
}

Element OrderMap::operator()(Element x) const {
  const auto i = domain_.index_of(x);
  if (!i) throw Error(Errc::invalid_argument, "element outside the domain of the map");
  return images_[*i];
}

std::vector<Element> OrderMap::range() const { return sorted_unique(images_); }

OrderMap compose(const OrderMap& g, const OrderMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(Errc::invalid_argument, "composition of maps with mismatched (co)domain");
  }
  std::vector<Element> images;
  images.reserve(f.images().size());
  for (Element y : f.images()) images.push_back(g(y));
  return OrderMap(f.domain(), g.codomain(), std::move(images));
}

bool is_quasi_embedding(const OrderMap& f) {
  const auto& dom = f.domain();
  const auto img = f.images();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (f.codomain().leq(img[i], img[j]) && !dom.leq_at(i, j)) return false;
    }
  }
  return true;
}

bool is_embedding(const OrderMap& f) {
  const auto& dom = f.domain();
  const auto img = f.images();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (f.codomain().leq(img[i], img[j]) != dom.leq_at(i, j)) return false;
    }
  }
  return true;
}

bool leq_fin(std::span<const Element> a, std::span<const Element> b, ElementOrder leq) {
  return std::all_of(a.begin(), a.end(), [&](Element x) {
    return std::any_of(b.begin(), b.end(), [&](Element y) { return leq(x, y); });
  });
}

bool leq_fin(std::span<const Element> a, std::span<const Element> b, const FinitePoset& p) {
  return leq_fin(a, b, [&p](Element x, Element y) { return p.leq(x, y); });
}

FinitePoset restrict(const FinitePoset& p, std::span<const Element> s) {
  for (Element x : s) {
    if (!p.contains(x)) throw Error(Errc::invalid_argument, "restriction to a non-subset");
  }
  return FinitePoset(std::vector<Element>(s.begin(), s.end()),
                     [&p](Element a, Element b) { return p.leq(a, b); });
}

std::vector<FinitePoset> all_posets(std::size_t max_size) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off_diagonal.emplace_back(i, j);
    if (off_diagonal.size() >= 32) throw Error(Errc::invalid_argument, "poset family too large");
    const std::uint64_t masks = std::uint64_t{1} << off_diagonal.size();
    std::vector<Element> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<Element>(i);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::pair<Element, Element>> pairs;
      for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(xs[i], xs[i]);
      for (std::size_t b = 0; b < off_diagonal.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) {
          pairs.emplace_back(xs[off_diagonal[b].first], xs[off_diagonal[b].second]);
        }
      }
      FinitePoset p = FinitePoset::from_pairs(xs, pairs);
      if (validate_poset(p).empty()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<OrderMap> all_quasi_embeddings(const FinitePoset& x, const FinitePoset& y) {
  std::vector<OrderMap> out;
  // Quasi embeddings are injective: f(a) = f(b) forces a <= b <= a.
  if (x.size() > y.size()) return out;
  std::vector<Element> images(x.size());
  std::vector<bool> used(y.size(), false);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == x.size()) {
      OrderMap f(x, y, images);
      if (is_quasi_embedding(f)) out.push_back(std::move(f));
      return;
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      images[i] = y.elements()[j];
      assign(i + 1);
      used[j] = false;
    }
  };
  assign(0);
  return out;
}

nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json j;
  j["elements"] = std::vector<Element>(p.elements().begin(), p.elements().end());
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : p.related_pairs()) pairs.push_back({a, b});
  j["leq"] = std::move(pairs);
  return j;
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  try {
    auto elements = j.at("elements").get<std::vector<Element>>();
    std::vector<std::pair<Element, Element>> pairs;
    for (Element e : elements) pairs.emplace_back(e, e);
    if (j.contains("leq")) {
      for (const auto& pair : j.at("leq")) {
        pairs.emplace_back(pair.at(0).get<Element>(), pair.at(1).get<Element>());
      }
    }
    return FinitePoset::from_pairs(std::move(elements), pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed poset JSON: ") + e.what());
  }
}

namespace {

// Kuhn's augmenting paths over bitmask adjacency; at most 64 right vertices.
struct SmallMatcher {
  const std::uint64_t* adjacency;
  std::array<std::size_t, 64> owner;
  std::uint64_t visited = 0;
  std::size_t none;

  bool augment(std::size_t i) {
    std::uint64_t candidates = adjacency[i] & ~visited;
    while (candidates != 0) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(candidates));
      candidates &= candidates - 1;
      visited |= std::uint64_t{1} << j;
      if (owner[j] == none || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

bool has_injective_assignment(std::size_t m, std::size_t n,
                              function_ref<bool(std::size_t, std::size_t)> edge) {
  if (m > n) return false;
  if (m == 0) return true;
  if (n <= 64) {
    std::array<std::uint64_t, 64> adjacency{};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (edge(i, j)) adjacency[i] |= std::uint64_t{1} << j;
      }
      if (adjacency[i] == 0) return false;
    }
    SmallMatcher matcher{adjacency.data(), {}, 0, m};
    matcher.owner.fill(m);
    for (std::size_t i = 0; i < m; ++i) {
      matcher.visited = 0;
      if (!matcher.augment(i)) return false;
    }
    return true;
  }

  std::vector<std::uint8_t> adjacency(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      adjacency[i * n + j] = edge(i, j) ? 1 : 0;
      any = any || adjacency[i * n + j];
    }
    if (!any) return false;
  }
  std::vector<std::size_t> owner(n, m);
  std::vector<std::uint8_t> visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (!adjacency[i * n + j] || visited[j]) continue;
      visited[j] = 1;
      if (owner[j] == m || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

}  // namespace kgap
