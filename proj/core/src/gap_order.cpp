#include "kgap/gap_order.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kgap/error.hpp"
#include "kgap/term_io.hpp"

namespace kgap {

namespace {

void collect_k(const TermStore& store, const Ordinal& gamma, TermId t, std::vector<TermId>& out) {
  const TermNode& n = store.node(t);
  if (n.label < gamma) return;
  if (std::find(out.begin(), out.end(), t) != out.end()) return;
  out.push_back(t);
  for (const TermId r : n.support) collect_k(store, gamma, r, out);
}

std::vector<TermId> sorted(std::vector<TermId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool includes(const std::vector<TermId>& big, const std::vector<TermId>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}


}  // namespace

const Ordinal& q_label(const TermStore& store, TermId t) { return store.node(t).label; }

std::vector<TermId> k_set(const TermStore& store, const Ordinal& gamma, TermId t) {
  std::vector<TermId> out;
  collect_k(store, gamma, t, out);
  return sorted(std::move(out));
}

std::vector<TermId> k_set_payload(const TermStore& store, const Ordinal& gamma, TermId t) {
  std::vector<TermId> out;
  for (const TermId r : store.node(t).support) collect_k(store, gamma, r, out);
  return sorted(std::move(out));
}

bool ll(const TermStore& store, TermId s, TermId t) {
  const Ordinal& gamma = std::min(q_label(store, s), q_label(store, t));
  std::vector<TermId> seen;
  std::function<bool(TermId)> search = [&](TermId r) {
    const TermNode& n = store.node(r);
    if (n.label < gamma) return false;
    if (r == s) return true;
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) return false;
    seen.push_back(r);
    return std::any_of(n.support.begin(), n.support.end(), search);
  };
  const auto& support = store.node(t).support;
  return std::any_of(support.begin(), support.end(), search);
}

std::vector<TermId> ll_predecessors(const TermStore& store, TermId t) {
  std::vector<TermId> out;
  for (const TermId s : k_set_payload(store, Ordinal{}, t)) {
    if (ll(store, s, t)) out.push_back(s);
  }
  return out;
}

bool ll_star(const TermStore& store, TermId s, TermId t) {
  std::vector<TermId> frontier{t};
  std::vector<TermId> seen{t};
  while (!frontier.empty()) {
    const TermId u = frontier.back();
    frontier.pop_back();
    if (u == s) return true;
    for (const TermId p : ll_predecessors(store, u)) {
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      frontier.push_back(p);
    }
  }
  return false;
}

std::uint32_t rank(const TermStore& store, TermId t) {
  std::unordered_map<TermId, std::uint32_t> memo;
  std::function<std::uint32_t(TermId)> go = [&](TermId u) -> std::uint32_t {
    if (const auto it = memo.find(u); it != memo.end()) return it->second;
    std::uint32_t r = 0;
    for (const TermId p : ll_predecessors(store, u)) r = std::max(r, go(p) + 1);
    memo.emplace(u, r);
    return r;
  };
  return go(t);
}

Ordinal q_beta(const Ordinal& beta, const TermStore& store, TermId t) {
  const Ordinal& q = q_label(store, t);
  return q < beta ? Ordinal{} : q;
}

Ordinal p_beta(const Ordinal& beta, const TermStore& store, TermId t) {
  return ord_add_nat(ord_omega_times(q_beta(beta, store, t)), rank(store, t));
}

GapFragment::GapFragment(const TermStore& store, std::vector<TermId> terms)
    : store_(&store), terms_(std::move(terms)) {
  std::vector<TermId> members = sorted(terms_);
  for (const TermId t : terms_) {
    for (const TermId s : store.node(t).support) {
      if (!std::binary_search(members.begin(), members.end(), s)) {
        throw Error(Errc::invalid_argument, "fragment is not closed under supports: term " +
                                                format_term(store, s) + " is missing");
      }
    }
  }
  std::vector<TermId> by_height = terms_;
  std::stable_sort(by_height.begin(), by_height.end(), [&store](TermId a, TermId b) {
    return store.node(a).height < store.node(b).height;
  });
  for (const TermId t : by_height) {
    auto preds = ll_predecessors(store, t);
    std::uint32_t r = 0;
    for (const TermId p : preds) r = std::max(r, ranks_.at(p) + 1);
    ranks_.emplace(t, r);
    predecessors_.emplace(t, std::move(preds));
  }
}

const std::vector<TermId>& GapFragment::predecessors(TermId t) const {
  return predecessors_.at(t);
}

std::uint32_t GapFragment::rank(TermId t) const { return ranks_.at(t); }

GapModel GapModel::blank(std::size_t n) {
  GapModel m;
  m.names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.names.push_back(std::to_string(i));
  m.q.assign(n, Ordinal{});
  m.leq.assign(n * n, 0);
  m.ll.assign(n * n, 0);
  m.ll_bound.assign(n * n, 0);
  return m;
}

GapModel gap_model(const GapFragment& fragment) {
  const TermStore& store = fragment.store();
  const auto terms = fragment.terms();
  const std::size_t n = terms.size();
  GapModel m = GapModel::blank(n);
  std::unordered_map<TermId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(terms[i], i);
    m.names[i] = format_term(store, terms[i]);
    m.q[i] = q_label(store, terms[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.leq[i * n + j] = store.leq(terms[i], terms[j]) ? 1 : 0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (const TermId p : fragment.predecessors(terms[j])) m.ll[index.at(p) * n + j] = 1;
    for (const TermId b : k_set_payload(store, Ordinal{}, terms[j])) {
      if (const auto it = index.find(b); it != index.end()) m.ll_bound[it->second * n + j] = 1;
    }
  }
  return m;
}

std::vector<Violation> check_gap_axioms(const GapModel& m, std::size_t chain_length) {
  const std::size_t n = m.size();
  std::vector<Violation> out;
  auto pair = [&](std::size_t a, std::size_t b) { return m.names[a] + "," + m.names[b]; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.leq_at(i, j) && !(m.q[i] <= m.q[j])) out.push_back({"axiom_i", pair(i, j)});
    }
  }

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!m.ll_at(s, t)) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (m.leq_at(r, s) && m.q[r] <= m.q[t] && !m.leq_at(r, t)) {
          out.push_back({"axiom_ii", m.names[r] + "," + m.names[s] + "," + m.names[t]});
        }
      }
    }
  }

  std::vector<std::size_t> chain;
  std::function<void(const Ordinal&)> extend = [&](const Ordinal& lowest) {
    const std::size_t last = chain.back();
    const std::size_t steps = chain.size() - 1;
    if (steps >= 2) {
      const std::size_t first = chain.front();
      if ((lowest == m.q[first] || lowest == m.q[last]) && !m.ll_at(first, last)) {
        std::string witness;
        for (std::size_t k = 0; k < chain.size(); ++k) {
          if (k > 0) witness += "<<";
          witness += m.names[chain[k]];
        }
        out.push_back({"axiom_iii", witness});
      }
    }
    if (steps >= chain_length) return;
    for (std::size_t next = 0; next < n; ++next) {
      if (!m.ll_at(last, next)) continue;
      chain.push_back(next);
      extend(std::min(lowest, m.q[next]));
      chain.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    chain.assign(1, s);
    extend(m.q[s]);
  }

  // (iv): Kahn elimination; a nonempty residue contains a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += m.ll_at(i, j) ? 1 : 0;
  }
  std::vector<std::size_t> order;
  std::vector<std::uint8_t> removed(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    removed[order[k]] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.ll_at(order[k], j) && --indegree[j] == 0) order.push_back(j);
    }
  }
  if (order.size() < n) {
    std::size_t u = static_cast<std::size_t>(std::find(removed.begin(), removed.end(), 0) - removed.begin());
    std::vector<std::size_t> walk;
    std::vector<std::uint8_t> on_walk(n, 0);
    while (on_walk[u] == 0) {
      on_walk[u] = 1;
      walk.push_back(u);
      for (std::size_t p = 0; p < n; ++p) {
        if (removed[p] == 0 && m.ll_at(p, u)) {
          u = p;
          break;
        }
      }
    }
    const auto start = std::find(walk.begin(), walk.end(), u);
    std::string witness;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      witness += m.names[*it] + ">>";
      if (it.base() - 1 == start) break;
    }
    witness += m.names[u];
    out.push_back({"axiom_iv", witness});
  } else {
    std::vector<std::size_t> r(n, 0);
    for (const std::size_t i : order) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.ll_at(i, j)) r[j] = std::max(r[j], r[i] + 1);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.ll_at(i, j) && !(r[i] < r[j])) out.push_back({"axiom_iv", pair(i, j)});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.ll_at(i, j) && !m.bound_at(i, j)) out.push_back({"axiom_v", pair(i, j)});
    }
  }
  return out;
}

std::vector<Violation> check_gap_axioms(const GapFragment& fragment, std::size_t chain_length) {
  return check_gap_axioms(gap_model(fragment), chain_length);
}

std::vector<Violation> check_k_set_laws(const TermStore& store, std::span<const TermId> fragment,
                                        std::span<const Ordinal> gammas) {
  std::vector<Violation> out;
  for (const TermId t : fragment) {
    for (const Ordinal& gamma : gammas) {
      const auto upper = k_set(store, gamma, t);
      for (const Ordinal& delta : gammas) {
        if (gamma < delta) continue;
        if (!includes(k_set(store, delta, t), upper)) {
          out.push_back({"kset_monotone",
                         gamma.to_string() + "," + delta.to_string() + "," + std::to_string(t)});
        }
      }
      for (const TermId s : upper) {
        if (!includes(upper, k_set(store, gamma, s))) {
          out.push_back({"kset_idempotent",
                         gamma.to_string() + "," + std::to_string(s) + "," + std::to_string(t)});
        }
      }
    }
  }
  return out;
}

std::string ll_dot(const TermStore& store, std::span<const TermId> fragment) {
  std::ostringstream out;
  out << "digraph gap {\n";
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_term(store, fragment[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    for (std::size_t j = 0; j < fragment.size(); ++j) {
      if (ll(store, fragment[i], fragment[j])) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace kgap
