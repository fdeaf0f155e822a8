#include "pq/clique.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pq/errors.hpp"

namespace pq {

UnionComplexityReport union_complexity(const Family& family) {
  std::vector<Point2> crossings;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto x = boundary_intersections(family[i], family[j]);
      crossings.insert(crossings.end(), x.begin(), x.end());
    }
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());

  UnionComplexityReport rep;
  for (auto& v : crossings) {
    const bool interior = std::any_of(family.bodies().begin(), family.bodies().end(),
                                      [&](const ConvexBody& b) { return b.contains_in_interior(v); });
    if (!interior) rep.vertices.push_back(std::move(v));
  }
  rep.vertex_count = rep.vertices.size();
  rep.k = static_cast<int>(family.size());
  rep.threshold = binomial(rep.k, 2);
  return rep;
}

UnionConditionResult check_union_condition(const Family& family, int k, Budget& budget) {
  if (k < 3) throw PreconditionError("union condition requires k >= 3");
  const auto n = family.size();
  if (static_cast<std::size_t>(k) > n) throw PreconditionError("k exceeds family size");
  if (binomial(static_cast<long>(n), k) > BigInt(static_cast<unsigned long>(budget.limits().max_subsets))) {
    throw BudgetExceeded("C(n,k) exceeds the subset budget");
  }
  UnionConditionResult res;
  const BigInt threshold = binomial(k, 2);
  std::vector<int> ids = family.ids();
  std::vector<int> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      budget.charge_subsets(1);
      ++res.subfamilies_checked;
      const auto rep = union_complexity(family.subfamily(chosen));
      if (BigInt(static_cast<unsigned long>(rep.vertex_count)) >= threshold) {
        res.holds = false;
        res.violating = chosen;
        res.violating_complexity = rep.vertex_count;
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i + (k - chosen.size()) <= n; ++i) {
      chosen.push_back(ids[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(0);
  return res;
}

ExactlyTwoUnionRecord exactly_two_union_check(const Family& family, Budget& budget) {
  const int k = static_cast<int>(family.size());
  if (k < 3) throw PreconditionError("exactly-2-intersecting union check requires k >= 3 bodies");
  if (!find_exactly_two_intersecting(family, k, budget)) {
    throw PreconditionError("family is not exactly 2-intersecting");
  }
  ExactlyTwoUnionRecord rec;
  rec.k = k;
  rec.union_complexity = union_complexity(family).vertex_count;
  rec.threshold = binomial(k, 2);
  const BigInt count(static_cast<unsigned long>(rec.union_complexity));
  if (count < rec.threshold) {
    throw VerificationFailure("exactly-two-union", "union complexity " + count.get_str() + " < C(k,2) = " +
                                             rec.threshold.get_str());
  }
  rec.tight = count == rec.threshold;
  return rec;
}

CliqueApproxReport approx_max_clique(const Family& family, bool compute_exact) {
  const DeepestPoint deep = deepest_candidate(family);
  CliqueApproxReport rep;
  rep.approx_clique = deep.members;
  rep.witness_point = deep.point;
  if (compute_exact) {
    IdSet exact = max_clique_exact(intersection_graph(family));
    rep.exact_clique_size = exact.size();
    rep.ratio = Rational(static_cast<long>(rep.approx_clique.size()), static_cast<long>(exact.size()));
    rep.exact_clique = std::move(exact);
  }
  return rep;
}

TripleForcingRecord triple_forcing_check(const Family& family, int p, int k, Budget& budget) {
  const auto n = family.size();
  if (k < 3) throw PreconditionError("triple-forcing check requires k >= 3");
  if (p < 2 || static_cast<std::size_t>(p) > n) {
    throw PreconditionError("triple-forcing check requires 2 <= p <= n");
  }
  if (!has_pq_property(family, p, 2, budget).holds) {
    throw PreconditionError("family does not satisfy the (" + std::to_string(p) + ",2)-property");
  }
  if (static_cast<std::size_t>(k) <= n && find_exactly_two_intersecting(family, k, budget)) {
    throw PreconditionError("family has an exactly 2-intersecting subfamily of size " +
                            std::to_string(k));
  }
  TripleForcingRecord rec;
  rec.p = p;
  rec.k = k;
  rec.ramsey_bound = ramsey_bound(k, p);

  const auto graph = intersection_graph(family);
  // Positions of intersecting triples, as membership for fast lookup.
  std::vector<std::vector<std::vector<bool>>> triple(
      n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  for (const auto& t : intersecting_tuples(family, 3, budget)) {
    const auto a = family.position_of(t[0]), b = family.position_of(t[1]), c = family.position_of(t[2]);
    triple[a][b][c] = true;
  }
  auto has_triple = [&](const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (std::size_t l = j + 1; l < s.size(); ++l)
          if (triple[s[i]][s[j]][s[l]]) return true;
    return false;
  };
  auto has_k_clique = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> c;
    std::function<bool(std::size_t)> grow = [&](std::size_t start) -> bool {
      if (static_cast<int>(c.size()) == k) return true;
      for (std::size_t i = start; i < s.size(); ++i) {
        if (std::all_of(c.begin(), c.end(), [&](std::size_t u) { return graph.adjacent[u][s[i]]; })) {
          c.push_back(s[i]);
          if (grow(i + 1)) return true;
          c.pop_back();
        }
      }
      return false;
    };
    return grow(0);
  };

  for (int m = 3; m <= static_cast<int>(n); ++m) {
    if (binomial(static_cast<long>(n), m) > BigInt(static_cast<unsigned long>(budget.limits().max_subsets))) {
      throw BudgetExceeded("C(n,m) exceeds the subset budget");
    }
    bool all_have_triple = true;
    std::vector<std::size_t> s;
    std::function<void(std::size_t)> rec_subsets = [&](std::size_t start) {
      if (static_cast<int>(s.size()) == m) {
        budget.charge_subsets(1);
        ++rec.subfamilies_checked;
        const bool triple_found = has_triple(s);
        if (has_k_clique(s)) {
          // A pairwise-intersecting k-subfamily is not exactly 2-intersecting.
          if (!triple_found) {
            throw VerificationFailure("triple-forcing", "k-clique without an intersecting triple");
          }
          ++rec.cliques_confirmed;
        }
        if (!triple_found) all_have_triple = false;
        return;
      }
      for (std::size_t i = start; i + (m - s.size()) <= n; ++i) {
        s.push_back(i);
        rec_subsets(i + 1);
        s.pop_back();
      }
    };
    rec_subsets(0);
    if (all_have_triple) {
      rec.smallest_m = m;
      break;
    }
  }
  if (rec.smallest_m && rec.ramsey_bound <= BigInt(static_cast<unsigned long>(n)) &&
      BigInt(*rec.smallest_m) > rec.ramsey_bound) {
    throw VerificationFailure("triple-forcing", "smallest m exceeds the Ramsey bound k p^4");
  }
  return rec;
}

}  // namespace pq
