#include "pq/family.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "pq/errors.hpp"
#include "pq/parallel.hpp"

namespace pq {

Family::Family(std::vector<ConvexBody> bodies) : bodies_(std::move(bodies)) {
  if (bodies_.empty()) throw PreconditionError("family must contain at least one body");
  std::stable_sort(bodies_.begin(), bodies_.end(),
                   [](const ConvexBody& a, const ConvexBody& b) { return a.id() < b.id(); });
  for (std::size_t i = 1; i < bodies_.size(); ++i) {
    if (bodies_[i].id() == bodies_[i - 1].id()) {
      throw PreconditionError("duplicate body id " + std::to_string(bodies_[i].id()));
    }
  }
}

IdSet Family::ids() const {
  IdSet out;
  out.reserve(bodies_.size());
  for (const auto& b : bodies_) out.push_back(b.id());
  return out;
}

std::size_t Family::position_of(int id) const {
  auto it = std::lower_bound(bodies_.begin(), bodies_.end(), id,
                             [](const ConvexBody& b, int v) { return b.id() < v; });
  if (it == bodies_.end() || it->id() != id) {
    throw PreconditionError("no body with id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - bodies_.begin());
}

Family Family::subfamily(std::span<const int> ids) const {
  std::vector<ConvexBody> out;
  for (int id : ids) out.push_back(bodies_[position_of(id)]);
  return Family(std::move(out));
}

Family Family::without(std::span<const int> ids) const {
  std::vector<ConvexBody> out;
  for (const auto& b : bodies_) {
    if (std::find(ids.begin(), ids.end(), b.id()) == ids.end()) out.push_back(b);
  }
  return Family(std::move(out));
}

IdSet Family::ids_at(std::span<const std::size_t> positions) const {
  IdSet out;
  for (auto p : positions) out.push_back(bodies_[p].id());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < adjacent.size(); ++i) {
    for (std::size_t j = i + 1; j < adjacent.size(); ++j) e += adjacent[i][j] ? 1 : 0;
  }
  return e;
}

IntersectionGraph intersection_graph(const Family& family) {
  const auto n = family.size();
  IntersectionGraph g{family.ids(), std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool hit = intersect(family[i], family[j]).has_value();
      g.adjacent[i][j] = g.adjacent[j][i] = hit;
    }
  }
  return g;
}

namespace {

using Mask = std::uint64_t;

void require_mask_capacity(std::size_t n) {
  if (n > 64) throw BudgetExceeded("subfamily search supports at most 64 bodies");
}

Mask mask_of(std::span<const std::size_t> positions) {
  Mask m = 0;
  for (auto p : positions) m |= Mask{1} << p;
  return m;
}

// Visits, in lexicographic order, every subfamily of size <= k_max whose first
// (smallest) position is `first` and that has a common point.
void visit_intersecting_from(
    const Family& family, std::size_t first, int k_max, Budget& budget,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen{first};
  std::function<void(const ConvexBody&)> dfs = [&](const ConvexBody& common) {
    budget.charge_subsets(1);
    visit(chosen);
    if (static_cast<int>(chosen.size()) >= k_max) return;
    for (std::size_t v = chosen.back() + 1; v < family.size(); ++v) {
      auto next = intersect(common, family[v]);
      if (!next) continue;
      chosen.push_back(v);
      dfs(*next);
      chosen.pop_back();
    }
  };
  dfs(family[first]);
}

// Per-first-position buckets, filled in parallel, concatenated in order.
std::vector<std::vector<std::size_t>> intersecting_positions(const Family& family, int k,
                                                             Budget& budget) {
  const auto n = family.size();
  std::vector<std::vector<std::vector<std::size_t>>> buckets(n);
  parallel_for(n, budget.limits().threads, [&](std::size_t first) {
    visit_intersecting_from(family, first, k, budget, [&](const std::vector<std::size_t>& s) {
      if (static_cast<int>(s.size()) == k) buckets[first].push_back(s);
    });
  });
  std::vector<std::vector<std::size_t>> out;
  for (auto& b : buckets) {
    for (auto& s : b) out.push_back(std::move(s));
  }
  return out;
}

// Lexicographically first independent set of exactly `size` vertices.
std::optional<std::vector<std::size_t>> first_independent_set(
    std::size_t n, std::span<const std::vector<std::size_t>> edges, std::size_t size,
    Budget& budget) {
  require_mask_capacity(n);
  std::vector<std::vector<Mask>> by_max(n);
  for (const auto& e : edges) {
    if (e.empty()) return std::nullopt;
    by_max[*std::max_element(e.begin(), e.end())].push_back(mask_of(e));
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, Mask)> dfs = [&](std::size_t start, Mask mask) -> bool {
    if (chosen.size() == size) return true;
    for (std::size_t v = start; v + (size - chosen.size()) <= n; ++v) {
      budget.charge_subsets(1, "independent-set search");
      const Mask next = mask | (Mask{1} << v);
      const bool blocked = std::any_of(by_max[v].begin(), by_max[v].end(),
                                       [&](Mask e) { return (e & next) == e; });
      if (blocked) continue;
      chosen.push_back(v);
      if (dfs(v + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (dfs(0, 0)) return chosen;
  return std::nullopt;
}

void check_pq_args(const Family& family, int p, int q) {
  if (q < 2) throw PreconditionError("(p,q) requires q >= 2");
  if (q > p) throw PreconditionError("(p,q) requires q <= p");
  if (static_cast<std::size_t>(p) > family.size()) {
    throw PreconditionError("(p,q) requires p <= n (p=" + std::to_string(p) +
                            ", n=" + std::to_string(family.size()) + ")");
  }
}

// Does `base` together with some (need)-subset of `pool` share a point?
bool extends_to_intersecting(const Family& family, const ConvexBody& base,
                             std::span<const std::size_t> pool, std::size_t start, int need,
                             Budget& budget) {
  if (need == 0) return true;
  for (std::size_t i = start; i + need <= pool.size(); ++i) {
    budget.charge_subsets(1);
    auto next = intersect(base, family[pool[i]]);
    if (next && extends_to_intersecting(family, *next, pool, i + 1, need - 1, budget)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TupleStats tuple_stats(const Family& family, int k_max, Budget& budget) {
  const auto n = family.size();
  if (k_max < 1 || static_cast<std::size_t>(k_max) > n) {
    throw PreconditionError("tuple_stats requires 1 <= k_max <= n");
  }
  std::vector<std::vector<std::uint64_t>> partial(n, std::vector<std::uint64_t>(k_max));
  parallel_for(n, budget.limits().threads, [&](std::size_t first) {
    visit_intersecting_from(family, first, k_max, budget,
                            [&](const std::vector<std::size_t>& s) { ++partial[first][s.size() - 1]; });
  });
  TupleStats stats;
  stats.f.assign(k_max, 0);
  for (const auto& row : partial) {
    for (int k = 0; k < k_max; ++k) stats.f[k] += row[k];
  }
  for (int r = 0; kPlaneDimension + r < k_max; ++r) {
    if (stats.f[kPlaneDimension + r] == 0) {
      stats.helly_residue = r;
      break;
    }
  }
  return stats;
}

std::vector<IdSet> intersecting_tuples(const Family& family, int k, Budget& budget) {
  if (k < 1 || static_cast<std::size_t>(k) > family.size()) return {};
  std::vector<IdSet> out;
  for (const auto& s : intersecting_positions(family, k, budget)) out.push_back(family.ids_at(s));
  return out;
}

std::vector<std::size_t> hypergraph_max_independent_set(
    std::size_t n, std::span<const std::vector<std::size_t>> edges, Budget& budget) {
  require_mask_capacity(n);
  std::vector<std::vector<Mask>> by_max(n);
  for (const auto& e : edges) {
    if (e.empty()) return {};
    by_max[*std::max_element(e.begin(), e.end())].push_back(mask_of(e));
  }
  std::vector<std::size_t> best;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, Mask)> dfs = [&](std::size_t start, Mask mask) {
    if (chosen.size() > best.size()) best = chosen;
    for (std::size_t v = start; v < n; ++v) {
      if (chosen.size() + (n - v) <= best.size()) return;
      budget.charge_subsets(1, "independent-set search");
      const Mask next = mask | (Mask{1} << v);
      const bool blocked = std::any_of(by_max[v].begin(), by_max[v].end(),
                                       [&](Mask e) { return (e & next) == e; });
      if (blocked) continue;
      chosen.push_back(v);
      dfs(v + 1, next);
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  return best;
}

PQDecision has_pq_property(const Family& family, int p, int q, Budget& budget) {
  check_pq_args(family, p, q);
  require_mask_capacity(family.size());
  // The property fails exactly when the hypergraph of intersecting q-tuples
  // has an independent set of size p.
  const auto edges = intersecting_positions(family, q, budget);
  auto independent = first_independent_set(family.size(), edges, static_cast<std::size_t>(p), budget);
  if (!independent) return {true, std::nullopt};
  return {false, family.ids_at(*independent)};
}

DichotomyResult dichotomy_split(const Family& family, int p, int q, int p_small, int q_small,
                                Budget& budget) {
  if (p_small >= p) throw PreconditionError("dichotomy requires p' < p");
  if (q_small >= q) throw PreconditionError("dichotomy requires q' < q");
  if (q_small < 2 || p_small < q_small) {
    throw PreconditionError("dichotomy requires 2 <= q' <= p'");
  }
  if (!has_pq_property(family, p, q, budget).holds) {
    throw PreconditionError("family does not satisfy the (" + std::to_string(p) + "," +
                            std::to_string(q) + ")-property");
  }

  // Greedy: grow S in id order, keeping it free of intersecting q'-tuples.
  std::vector<std::size_t> greedy;
  for (std::size_t v = 0; v < family.size() && static_cast<int>(greedy.size()) < p_small; ++v) {
    if (!extends_to_intersecting(family, family[v], greedy, 0, q_small - 1, budget)) {
      greedy.push_back(v);
    }
  }

  IdSet split;
  bool found_greedily = false;
  if (static_cast<int>(greedy.size()) == p_small) {
    split = family.ids_at(greedy);
    found_greedily = true;
  } else {
    PQDecision smaller = has_pq_property(family, p_small, q_small, budget);
    if (smaller.holds) return SmallerPropertyHolds{p_small, q_small, std::move(smaller)};
    split = *smaller.counterexample;
  }

  const Family s = family.subfamily(split);
  if (!intersecting_tuples(s, q_small, budget).empty()) {
    throw VerificationFailure("dichotomy", "split-off subfamily has an intersecting q'-tuple");
  }
  const int rp = p - p_small;
  const int rq = q - q_small + 1;
  if (rq > rp) {
    throw VerificationFailure("dichotomy", "split-off subfamily contradicts the (p,q)-property");
  }
  PQDecision residual = has_pq_property(family.without(split), rp, rq, budget);
  if (!residual.holds) {
    throw VerificationFailure("dichotomy", "remainder lacks the residual property");
  }
  return SplitOff{std::move(split), rp, rq, std::move(residual), found_greedily};
}

std::optional<IdSet> find_exactly_two_intersecting(const Family& family, int k, Budget& budget) {
  if (k < 3) throw PreconditionError("exactly-2-intersecting search requires k >= 3");
  const auto n = family.size();
  if (static_cast<std::size_t>(k) > n) throw PreconditionError("k exceeds family size");

  std::vector<std::vector<std::optional<ConvexBody>>> pair(n, std::vector<std::optional<ConvexBody>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pair[i][j] = intersect(family[i], family[j]);
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t v = start; v + (k - chosen.size()) <= n; ++v) {
      budget.charge_subsets(1);
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t a) { return pair[a][v].has_value(); });
      for (std::size_t i = 0; ok && i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; ok && j < chosen.size(); ++j) {
          if (intersect(*pair[chosen[i]][chosen[j]], family[v])) ok = false;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (dfs(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (dfs(0)) return family.ids_at(chosen);
  return std::nullopt;
}

IdSet max_clique_exact(const IntersectionGraph& graph) {
  const auto n = graph.size();
  if (n == 0) return {};
  using Set = std::vector<std::size_t>;
  auto neighbors_in = [&](std::size_t v, const Set& s) {
    Set out;
    for (auto u : s) {
      if (u != v && graph.adjacent[v][u]) out.push_back(u);
    }
    return out;
  };

  Set best;
  auto better = [&](const Set& r) {
    if (r.size() != best.size()) return r.size() > best.size();
    Set a = r;
    std::sort(a.begin(), a.end());
    return a < best;
  };

  std::function<void(Set&, Set, Set)> bk = [&](Set& r, Set p, Set x) {
    if (r.size() + p.size() < best.size()) return;
    if (p.empty()) {
      if (x.empty() && better(r)) {
        best = r;
        std::sort(best.begin(), best.end());
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    std::size_t pivot = p.front();
    std::size_t most = 0;
    for (const Set* s : {&p, &x}) {
      for (auto u : *s) {
        const auto c = neighbors_in(u, p).size();
        if (c > most) {
          most = c;
          pivot = u;
        }
      }
    }
    Set candidates;
    for (auto v : p) {
      if (v == pivot || !graph.adjacent[pivot][v]) candidates.push_back(v);
    }
    for (auto v : candidates) {
      r.push_back(v);
      bk(r, neighbors_in(v, p), neighbors_in(v, x));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  Set all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  Set r;
  bk(r, all, {});
  IdSet out;
  for (auto v : best) out.push_back(graph.ids[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pq
