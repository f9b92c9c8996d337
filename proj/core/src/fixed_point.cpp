#include "kgap/fixed_point.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "kgap/error.hpp"

namespace kgap {

std::size_t TermStore::KeyHash::operator()(const Key& k) const {
  return k.label.hash() * 0x9E3779B97F4A7C15ULL ^ DilatorElementHash{}(k.payload);
}

TermStore::TermStore(std::shared_ptr<const Dilator> dilator, Ordinal label_bound)
    : dilator_(std::move(dilator)),
      label_bound_(std::move(label_bound)),
      chunks_(new std::atomic<TermNode*>[kMaxChunks]()) {
  if (!dilator_) throw Error(Errc::invalid_argument, "term store needs a dilator");
}

TermStore::~TermStore() {
  for (std::size_t c = 0; c < kMaxChunks; ++c) delete[] chunks_[c].load(std::memory_order_relaxed);
}

const TermNode& TermStore::node(TermId id) const {
  TermNode* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
  return chunk[id & (kChunkSize - 1)];
}

std::optional<TermId> TermStore::find(const Ordinal& label, const DilatorElement& sigma) const {
  Key key{label, dilator_->normalize(sigma)};
  std::lock_guard lock(intern_mutex_);
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TermId TermStore::kappa(const Ordinal& label, const DilatorElement& sigma) {
  if (!(label < label_bound_)) {
    throw Error(Errc::label_out_of_range,
                "label " + label.to_string() + " is not below " + label_bound_.to_string());
  }
  const std::size_t known = size();
  for (const Element slot : sigma.slots) {
    if (slot >= known) {
      throw Error(Errc::invalid_argument, "payload refers to unknown term " + std::to_string(slot));
    }
  }
  Key key{label, dilator_->normalize(sigma)};
  std::vector<Element> support = dilator_->support(key.payload);
  if (!dilator_->is_element(key.payload, support)) {
    throw Error(Errc::invalid_argument, "payload is not an element of " + dilator_->name());
  }

  std::lock_guard lock(intern_mutex_);
  if (const auto it = index_.find(key); it != index_.end()) return it->second;

  const std::size_t id = size_.load(std::memory_order_relaxed);
  if (id >= kChunkSize * kMaxChunks) {
    throw Error(Errc::capacity_exceeded, "term store is full");
  }
  std::atomic<TermNode*>& slot = chunks_[id >> kChunkBits];
  TermNode* chunk = slot.load(std::memory_order_relaxed);
  if (chunk == nullptr) {
    chunk = new TermNode[kChunkSize];
    slot.store(chunk, std::memory_order_release);
  }

  TermNode& n = chunk[id & (kChunkSize - 1)];
  n.label = key.label;
  n.payload = key.payload;
  n.length = 1;
  n.height = 0;
  for (const TermId s : support) {
    const TermNode& child = node(s);
    n.length += 2 * child.length;
    n.height = std::max(n.height, child.height + 1);
  }
  n.canonical_support = support;
  sort_canonically(n.canonical_support);
  n.support = std::move(support);

  const auto term = static_cast<TermId>(id);
  index_.emplace(std::move(key), term);
  size_.store(id + 1, std::memory_order_release);
  return term;
}

bool TermStore::clause_one(const TermNode& a, const TermNode& b) const {
  return dilator_->leq(a.payload, b.payload,
                       [this](Element x, Element y) { return leq(x, y); });
}

std::optional<TermId> TermStore::clause_two(TermId s, const TermNode& b) const {
  for (const TermId r : b.support) {
    if (leq(s, r)) return r;
  }
  return std::nullopt;
}

bool TermStore::leq(TermId s, TermId t) const {
  if (const auto cached = memo_.get(s, t)) return *cached;
  const TermNode& a = node(s);
  const TermNode& b = node(t);
  const bool result = a.label <= b.label && (clause_one(a, b) || clause_two(s, b).has_value());
  memo_.put(s, t, result);
  return result;
}

LeqTrace TermStore::explain(TermId s, TermId t, std::size_t max_depth) const {
  LeqTrace trace;
  trace.s = s;
  trace.t = t;
  const TermNode& a = node(s);
  const TermNode& b = node(t);
  trace.label_ok = a.label <= b.label;
  if (trace.label_ok) {
    trace.clause_i = clause_one(a, b);
    trace.witness = clause_two(s, b);
    trace.clause_ii = trace.witness.has_value();
  }
  trace.result = trace.label_ok && (trace.clause_i || trace.clause_ii);
  if (trace.clause_ii && !trace.clause_i && max_depth > 0) {
    trace.children.push_back(explain(s, *trace.witness, max_depth - 1));
  }
  return trace;
}

std::strong_ordering TermStore::canonical_compare(TermId x, TermId y) const {
  if (x == y) return std::strong_ordering::equal;
  const TermNode& a = node(x);
  const TermNode& b = node(y);
  if (auto c = a.length <=> b.length; c != 0) return c;
  if (auto c = a.label <=> b.label; c != 0) return c;
  const std::size_t common = std::min(a.canonical_support.size(), b.canonical_support.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = canonical_compare(a.canonical_support[i], b.canonical_support[i]); c != 0) return c;
  }
  if (auto c = a.canonical_support.size() <=> b.canonical_support.size(); c != 0) return c;
  if (auto c = a.payload.shape <=> b.payload.shape; c != 0) return c;

  // Equal supports: compare slots by their position in the canonical support.
  auto positions = [&](const TermNode& n) {
    std::vector<std::size_t> pos;
    pos.reserve(n.payload.slots.size());
    for (const Element slot : n.payload.slots) {
      const auto it = std::find(n.canonical_support.begin(), n.canonical_support.end(), slot);
      pos.push_back(static_cast<std::size_t>(it - n.canonical_support.begin()));
    }
    if (dilator_->kind() == DilatorKind::multiset) std::sort(pos.begin(), pos.end());
    return pos;
  };
  if (auto c = positions(a) <=> positions(b); c != 0) return c;
  return x <=> y;
}

void TermStore::sort_canonically(std::vector<TermId>& ids) const {
  std::sort(ids.begin(), ids.end(), [this](TermId a, TermId b) { return canonical_less(a, b); });
}

bool term_leq(const TermStore& store, TermId s, TermId t) { return store.leq(s, t); }

TermId kappa(TermStore& store, const Ordinal& label, const DilatorElement& sigma) {
  return store.kappa(label, sigma);
}

std::pair<Ordinal, DilatorElement> kappa_inverse(const TermStore& store, TermId t) {
  const TermNode& n = store.node(t);
  return {n.label, n.payload};
}

std::vector<TermId> enumerate_terms(TermStore& store, std::span<const Ordinal> labels,
                                    std::uint64_t max_length, std::size_t budget) {
  if (labels.empty()) throw Error(Errc::invalid_argument, "label list is empty");
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (!(labels[i - 1] < labels[i])) {
      throw Error(Errc::invalid_argument, "labels must be strictly ascending");
    }
  }
  for (const Ordinal& label : labels) {
    if (!(label < store.label_bound())) {
      throw Error(Errc::label_out_of_range,
                  "label " + label.to_string() + " is not below " +
                      store.label_bound().to_string());
    }
  }

  const Dilator& d = store.dilator();
  std::vector<TermId> pool;  // generated so far, ascending length
  std::vector<TermId> chosen;

  for (std::uint64_t length = 1; length <= max_length; length += 2) {
    const std::uint64_t target = (length - 1) / 2;
    std::vector<TermId> candidates;
    for (const TermId t : pool) {
      if (store.node(t).length <= target) candidates.push_back(t);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<TermId> fresh;

    std::function<void(std::size_t, std::uint64_t)> choose = [&](std::size_t from,
                                                                std::uint64_t remaining) {
      if (remaining == 0) {
        for (const DilatorElement& sigma : d.enumerate(chosen, budget)) {
          if (d.support(sigma) != chosen) continue;
          for (const Ordinal& label : labels) fresh.push_back(store.kappa(label, sigma));
        }
        return;
      }
      for (std::size_t i = from; i < candidates.size(); ++i) {
        const std::uint64_t l = store.node(candidates[i]).length;
        if (l > remaining) continue;
        chosen.push_back(candidates[i]);
        choose(i + 1, remaining - l);
        chosen.pop_back();
      }
    };
    choose(0, target);
    pool.insert(pool.end(), fresh.begin(), fresh.end());
  }

  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  store.sort_canonically(pool);
  return pool;
}

FinitePoset fragment_order(const TermStore& store, std::span<const TermId> fragment) {
  return FinitePoset(std::vector<Element>(fragment.begin(), fragment.end()),
                     [&store](Element a, Element b) { return store.leq(a, b); });
}

std::vector<Violation> check_height_criterion(const TermStore& store,
                                              std::span<const TermId> fragment,
                                              function_ref<std::uint32_t(TermId)> height) {
  std::vector<TermId> members(fragment.begin(), fragment.end());
  std::sort(members.begin(), members.end());
  std::vector<Violation> out;
  for (const TermId t : fragment) {
    for (const TermId s : store.node(t).support) {
      if (!std::binary_search(members.begin(), members.end(), s)) {
        out.push_back({"closure", std::to_string(s) + "," + std::to_string(t)});
        continue;
      }
      if (!(height(s) < height(t))) {
        out.push_back({"height", std::to_string(s) + "," + std::to_string(t)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_height_criterion(const TermStore& store,
                                              std::span<const TermId> fragment) {
  return check_height_criterion(store, fragment,
                                [&store](TermId t) { return store.node(t).height; });
}

namespace {

bool same_dilator(const Dilator& a, const Dilator& b) {
  if (&a == &b) return true;
  if (a.name() != b.name()) return false;
  if (a.kind() == DilatorKind::labeled_cons) {
    return static_cast<const LabeledConsDilator&>(a).z_order() ==
           static_cast<const LabeledConsDilator&>(b).z_order();
  }
  return true;
}

}  // namespace

TermId embed_into_larger(const LabelMap& map, const TermStore& source, TermId t,
                         TermStore& target) {
  const Ordinal* previous = nullptr;
  for (const auto& [from, to] : map) {
    if (previous != nullptr && !(*previous < to)) {
      throw Error(Errc::non_monotone_label_map,
                  "label map is not strictly monotone at " + from.to_string());
    }
    previous = &to;
  }
  if (!same_dilator(source.dilator(), target.dilator())) {
    throw Error(Errc::wrong_dilator, "source and target use different dilators");
  }

  std::unordered_map<TermId, TermId> done;
  std::function<TermId(TermId)> embed = [&](TermId x) -> TermId {
    if (const auto it = done.find(x); it != done.end()) return it->second;
    const TermNode& n = source.node(x);
    const auto label = map.find(n.label);
    if (label == map.end()) {
      throw Error(Errc::unmapped_label, "label " + n.label.to_string() + " is not mapped");
    }
    const DilatorElement payload =
        source.dilator().map(n.payload, [&embed](Element e) { return embed(e); });
    const TermId y = target.kappa(label->second, payload);
    done.emplace(x, y);
    return y;
  };
  return embed(t);
}

bool higman_leq(const FinitePoset& z, const ZSequence& a, const ZSequence& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
    if (z.leq(a[i], b[j])) ++i;
  }
  return i == a.size();
}

TermId higman_to_term(TermStore& store, const ZSequence& seq) {
  if (store.dilator().kind() != DilatorKind::labeled_cons) {
    throw Error(Errc::wrong_dilator, "sequence terms need the cons dilator");
  }
  const Ordinal zero;
  TermId t = store.kappa(zero, LabeledConsDilator::zero());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    t = store.kappa(zero, LabeledConsDilator::pair(*it, t));
  }
  return t;
}

ZSequence term_to_higman(const TermStore& store, TermId t) {
  if (store.dilator().kind() != DilatorKind::labeled_cons) {
    throw Error(Errc::wrong_dilator, "sequence terms need the cons dilator");
  }
  ZSequence out;
  for (;;) {
    const TermNode& n = store.node(t);
    if (n.payload.shape == 0) return out;
    out.push_back(LabeledConsDilator::z_of(n.payload));
    t = n.payload.slots.front();
  }
}

bool omega_nu_leq(const LabelSequence& a, const LabelSequence& b) {
  for (std::size_t i = 0;; ++i) {
    if (i == a.size()) return true;
    if (i == b.size()) return false;
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
}

TermId omega_nu_embed(TermStore& store, const LabelSequence& seq) {
  if (store.dilator().kind() != DilatorKind::one_plus) {
    throw Error(Errc::wrong_dilator, "label sequences need the 1+X dilator");
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] < seq[i]) {
      throw Error(Errc::not_weakly_decreasing,
                  "sequence increases at position " + std::to_string(i));
    }
  }
  TermId t = store.kappa(Ordinal{}, OnePlusDilator::zero());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    t = store.kappa(*it, OnePlusDilator::succ(t));
  }
  return t;
}

}  // namespace kgap
