#include "kgap/dilator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kgap/error.hpp"

namespace kgap {

namespace {

constexpr std::size_t kMaxViolationsPerLaw = 25;

std::string describe(const FinitePoset& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.elements()[i];
  os << "|";
  bool first = true;
  for (const auto& [a, b] : p.related_pairs()) {
    if (a == b) continue;
    os << (first ? "" : ",") << a << "<" << b;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string describe(const DilatorElement& e) {
  std::ostringstream os;
  os << "s" << e.shape << "[";
  for (std::size_t i = 0; i < e.slots.size(); ++i) os << (i ? "," : "") << e.slots[i];
  os << "]";
  return os.str();
}

std::string describe(const OrderMap& f) {
  std::ostringstream os;
  os << describe(f.domain()) << "->" << describe(f.codomain()) << " [";
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    os << (i ? "," : "") << f.domain().elements()[i] << ":" << f.images()[i];
  }
  os << "]";
  return os.str();
}

bool in_carrier(Element x, std::span<const Element> carrier) {
  return std::find(carrier.begin(), carrier.end(), x) != carrier.end();
}

// All multisets over `carrier` with at most `budget` entries, as sorted slot lists.
std::vector<DilatorElement> enumerate_multisets(std::span<const Element> carrier,
                                                std::size_t budget) {
  std::vector<Element> xs(carrier.begin(), carrier.end());
  std::sort(xs.begin(), xs.end());
  std::vector<DilatorElement> out;
  std::vector<Element> current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    out.push_back({0, current});
    if (current.size() == budget) return;
    for (std::size_t i = from; i < xs.size(); ++i) {
      current.push_back(xs[i]);
      extend(i);
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

class LawLog {
 public:
  void add(const std::string& law, std::string witness) {
    auto& count = counts_[law];
    if (count++ < kMaxViolationsPerLaw) out_.push_back({law, std::move(witness)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::map<std::string, std::size_t> counts_;
  std::vector<Violation> out_;
};

}  // namespace

std::size_t DilatorElementHash::operator()(const DilatorElement& e) const {
  std::size_t seed = std::hash<std::uint32_t>{}(e.shape);
  for (Element x : e.slots) {
    seed ^= std::hash<Element>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

bool Dilator::leq(const FinitePoset& x, const DilatorElement& sigma,
                  const DilatorElement& tau) const {
  return leq(sigma, tau, [&x](Element a, Element b) { return x.leq(a, b); });
}

std::vector<Element> Dilator::support(const DilatorElement& sigma) const {
  std::vector<Element> out = sigma.slots;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DilatorElement Dilator::map(const DilatorElement& sigma, function_ref<Element(Element)> f) const {
  DilatorElement out{sigma.shape, {}};
  out.slots.reserve(sigma.slots.size());
  for (Element x : sigma.slots) out.slots.push_back(f(x));
  return normalize(std::move(out));
}

DilatorElement Dilator::apply_map(const OrderMap& f, const DilatorElement& sigma) const {
  return map(sigma, [&f](Element x) { return f(x); });
}

AppliedOrder apply_order(const Dilator& d, const FinitePoset& x, std::size_t budget) {
  AppliedOrder out;
  out.elements = d.enumerate(x.elements(), budget);
  std::vector<Element> ids(out.elements.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Element>(i);
  out.order = FinitePoset(std::move(ids), [&](Element a, Element b) {
    return d.leq(x, out.elements[a], out.elements[b]);
  });
  return out;
}

// --- multiset ---------------------------------------------------------------

bool MultisetDilator::leq(const DilatorElement& sigma, const DilatorElement& tau,
                          ElementOrder leq) const {
  const auto& xs = sigma.slots;
  const auto& ys = tau.slots;
  return has_injective_assignment(xs.size(), ys.size(), [&](std::size_t i, std::size_t j) {
    return leq(xs[i], ys[j]);
  });
}

DilatorElement MultisetDilator::normalize(DilatorElement sigma) const {
  std::sort(sigma.slots.begin(), sigma.slots.end());
  return sigma;
}

bool MultisetDilator::is_element(const DilatorElement& sigma,
                                 std::span<const Element> carrier) const {
  if (sigma.shape != 0 || !std::is_sorted(sigma.slots.begin(), sigma.slots.end())) return false;
  return std::all_of(sigma.slots.begin(), sigma.slots.end(),
                     [&](Element x) { return in_carrier(x, carrier); });
}

std::vector<DilatorElement> MultisetDilator::enumerate(std::span<const Element> carrier,
                                                       std::size_t budget) const {
  return enumerate_multisets(carrier, budget);
}

bool RelaxedMultisetDilator::leq(const DilatorElement& sigma, const DilatorElement& tau,
                                 ElementOrder leq) const {
  return leq_fin(sigma.slots, tau.slots, leq);
}

DilatorElement RelaxedMultisetDilator::normalize(DilatorElement sigma) const {
  std::sort(sigma.slots.begin(), sigma.slots.end());
  return sigma;
}

bool RelaxedMultisetDilator::is_element(const DilatorElement& sigma,
                                        std::span<const Element> carrier) const {
  return MultisetDilator{}.is_element(sigma, carrier);
}

std::vector<DilatorElement> RelaxedMultisetDilator::enumerate(std::span<const Element> carrier,
                                                              std::size_t budget) const {
  return enumerate_multisets(carrier, budget);
}

// --- 1 + X --------------------------------------------------------------------

bool OnePlusDilator::leq(const DilatorElement& sigma, const DilatorElement& tau,
                         ElementOrder leq) const {
  if (sigma.shape != tau.shape) return false;
  if (sigma.shape == kZero) return true;
  return leq(sigma.slots[0], tau.slots[0]);
}

bool OnePlusDilator::is_element(const DilatorElement& sigma,
                                std::span<const Element> carrier) const {
  if (sigma.shape == kZero) return sigma.slots.empty();
  return sigma.shape == kSucc && sigma.slots.size() == 1 && in_carrier(sigma.slots[0], carrier);
}

std::vector<DilatorElement> OnePlusDilator::enumerate(std::span<const Element> carrier,
                                                      std::size_t /*budget*/) const {
  std::vector<DilatorElement> out{zero()};
  for (Element x : carrier) out.push_back(succ(x));
  std::sort(out.begin(), out.end());
  return out;
}

// --- 1 + Z x X ----------------------------------------------------------------

LabeledConsDilator::LabeledConsDilator(FinitePoset z_order) : z_order_(std::move(z_order)) {
  if (!validate_poset(z_order_).empty()) {
    throw Error(Errc::invalid_argument, "Z must be a partial order");
  }
}

bool LabeledConsDilator::leq(const DilatorElement& sigma, const DilatorElement& tau,
                             ElementOrder leq) const {
  if (sigma.shape == 0 || tau.shape == 0) return sigma.shape == tau.shape;
  return z_order_.leq(z_of(sigma), z_of(tau)) && leq(sigma.slots[0], tau.slots[0]);
}

bool LabeledConsDilator::is_element(const DilatorElement& sigma,
                                    std::span<const Element> carrier) const {
  if (sigma.shape == 0) return sigma.slots.empty();
  return z_order_.contains(z_of(sigma)) && sigma.slots.size() == 1 &&
         in_carrier(sigma.slots[0], carrier);
}

std::vector<DilatorElement> LabeledConsDilator::enumerate(std::span<const Element> carrier,
                                                          std::size_t /*budget*/) const {
  std::vector<DilatorElement> out{zero()};
  for (Element z : z_order_.elements()) {
    for (Element x : carrier) out.push_back(pair(z, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- traces and normal forms ---------------------------------------------------

std::vector<DilatorElement> trace_elements(const Dilator& d, const FinitePoset& a,
                                           std::size_t budget) {
  std::vector<DilatorElement> out;
  const std::vector<Element> carrier(a.elements().begin(), a.elements().end());
  for (auto& sigma : d.enumerate(a.elements(), budget)) {
    if (d.support(sigma) == carrier) out.push_back(std::move(sigma));
  }
  return out;
}

NormalForm normal_form(const Dilator& d, const FinitePoset& x, const DilatorElement& sigma) {
  if (!d.is_element(sigma, x.elements())) {
    throw Error(Errc::invalid_argument, "normal_form: not an element of W(X)");
  }
  NormalForm nf;
  nf.support = d.support(sigma);
  nf.carrier = restrict(x, nf.support);
  // Identifiers are shared between a suborder and X, so the inclusion acts as
  // the identity on representations.
  nf.trace = d.normalize(sigma);
  return nf;
}

// --- law checker -------------------------------------------------------------

std::vector<Violation> check_dilator_laws(const Dilator& d, std::size_t size_cap,
                                          std::size_t budget) {
  LawLog log;
  const std::vector<FinitePoset> posets = all_posets(size_cap);
  const std::size_t n = posets.size();

  std::vector<std::vector<DilatorElement>> elements(n);
  for (std::size_t i = 0; i < n; ++i) elements[i] = d.enumerate(posets[i].elements(), budget);

  std::vector<std::vector<std::vector<OrderMap>>> maps(n, std::vector<std::vector<OrderMap>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) maps[i][j] = all_quasi_embeddings(posets[i], posets[j]);

  for (std::size_t xi = 0; xi < n; ++xi) {
    const FinitePoset& x = posets[xi];
    const auto& wx = elements[xi];
    const std::string xs = describe(x);

    for (const auto& sigma : wx) {
      if (!d.is_element(sigma, x.elements()) || !(d.normalize(sigma) == sigma)) {
        log.add("element", xs + " " + describe(sigma));
      }
      if (!(d.apply_map(OrderMap::identity(x), sigma) == sigma)) {
        log.add("identity", xs + " " + describe(sigma));
      }
    }

    const AppliedOrder applied = apply_order(d, x, budget);
    for (const auto& v : validate_poset(applied.order)) {
      std::ostringstream witness;
      witness << xs;
      std::istringstream ids(v.witness);
      std::string id;
      while (std::getline(ids, id, ',')) witness << " " << describe(applied.elements[std::stoul(id)]);
      log.add("poset", witness.str());
    }

    for (const auto& sigma : wx) {
      for (const auto& tau : wx) {
        if (d.leq(x, sigma, tau) && !leq_fin(d.support(sigma), d.support(tau), x)) {
          log.add("normality", xs + " " + describe(sigma) + " " + describe(tau));
        }
      }
    }

    for (std::size_t yi = 0; yi < n; ++yi) {
      const FinitePoset& y = posets[yi];
      for (const OrderMap& f : maps[xi][yi]) {
        const std::string fs = describe(f);
        std::vector<DilatorElement> image;
        image.reserve(wx.size());
        for (const auto& sigma : wx) {
          image.push_back(d.apply_map(f, sigma));
          if (!d.is_element(image.back(), y.elements())) {
            log.add("element", fs + " " + describe(image.back()));
          }
          std::vector<Element> pushed;
          for (Element e : d.support(sigma)) pushed.push_back(f(e));
          std::sort(pushed.begin(), pushed.end());
          pushed.erase(std::unique(pushed.begin(), pushed.end()), pushed.end());
          if (d.support(image.back()) != pushed) {
            log.add("naturality", fs + " " + describe(sigma));
          }
        }

        const bool embedding = is_embedding(f);
        for (std::size_t a = 0; a < wx.size(); ++a) {
          for (std::size_t b = 0; b < wx.size(); ++b) {
            const bool before = d.leq(x, wx[a], wx[b]);
            const bool after = d.leq(y, image[a], image[b]);
            if (after && !before) {
              log.add("morphism", fs + " " + describe(wx[a]) + " " + describe(wx[b]));
            }
            if (embedding && before && !after) {
              log.add("embedding", fs + " " + describe(wx[a]) + " " + describe(wx[b]));
            }
          }
        }

        if (embedding) {
          const std::vector<Element> range = f.range();
          auto within_range = [&](const std::vector<Element>& s) {
            return std::includes(range.begin(), range.end(), s.begin(), s.end());
          };
          for (const auto& rho : elements[yi]) {
            const bool in_image = std::find(image.begin(), image.end(), rho) != image.end();
            const bool supported = within_range(d.support(rho));
            if (supported && !in_image) log.add("support_condition", fs + " " + describe(rho));
            if (in_image && !supported) log.add("support_converse", fs + " " + describe(rho));
          }
        }

        for (std::size_t zi = 0; zi < n; ++zi) {
          for (const OrderMap& g : maps[yi][zi]) {
            for (std::size_t a = 0; a < wx.size(); ++a) {
              const DilatorElement direct = d.map(wx[a], [&](Element e) { return g(f(e)); });
              if (!(direct == d.apply_map(g, image[a]))) {
                log.add("composition", fs + " then " + describe(g) + " " + describe(wx[a]));
              }
            }
          }
        }
      }
    }
  }
  return log.take();
}

std::shared_ptr<const Dilator> make_dilator(const std::string& name) {
  if (name == "multiset") return std::make_shared<MultisetDilator>();
  if (name == "oneplus") return std::make_shared<OnePlusDilator>();
  if (name == "multiset-relaxed") return std::make_shared<RelaxedMultisetDilator>();
  throw Error(Errc::invalid_argument, "unknown dilator '" + name + "'");
}

}  // namespace kgap
