#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pq/budget.hpp"
#include "pq/geometry.hpp"

namespace pq {

/// Sorted list of body ids.
using IdSet = std::vector<int>;

/// Nonempty list of convex bodies with unique ids, kept in ascending id order.
class Family {
 public:
  explicit Family(std::vector<ConvexBody> bodies);

  std::size_t size() const { return bodies_.size(); }
  const std::vector<ConvexBody>& bodies() const { return bodies_; }
  const ConvexBody& operator[](std::size_t i) const { return bodies_[i]; }

  IdSet ids() const;
  std::size_t position_of(int id) const;
  Family subfamily(std::span<const int> ids) const;
  Family without(std::span<const int> ids) const;

  IdSet ids_at(std::span<const std::size_t> positions) const;

 private:
  std::vector<ConvexBody> bodies_;
};

struct IntersectionGraph {
  IdSet ids;
  std::vector<std::vector<bool>> adjacent;  // by position in `ids`

  std::size_t size() const { return ids.size(); }
  std::size_t edge_count() const;
};

IntersectionGraph intersection_graph(const Family& family);

struct TupleStats {
  /// f[k-1] = number of k-subfamilies with a common point, k = 1..k_max.
  std::vector<std::uint64_t> f;
  /// Smallest r >= 0 with f[d + r] == 0 (d = 2), when visible within k_max.
  std::optional<int> helly_residue;
};

inline constexpr int kPlaneDimension = 2;

TupleStats tuple_stats(const Family& family, int k_max, Budget& budget);

/// All k-subfamilies with a common point, as lexicographically ordered id sets.
std::vector<IdSet> intersecting_tuples(const Family& family, int k, Budget& budget);

struct PQDecision {
  bool holds = true;
  std::optional<IdSet> counterexample;  // p ids, no q of them share a point
};

/// Exhaustive (p,q)-property test. The counterexample, if any, is the
/// lexicographically smallest. Throws PreconditionError unless 2 <= q <= p <= n.
PQDecision has_pq_property(const Family& family, int p, int q, Budget& budget);

/// Largest set of vertices of a k-uniform hypergraph on `n` vertices (0..n-1)
/// containing no edge. Edges are position sets. Requires n <= 64.
std::vector<std::size_t> hypergraph_max_independent_set(
    std::size_t n, std::span<const std::vector<std::size_t>> edges, Budget& budget);

/// Left branch: the smaller property holds outright.
struct SmallerPropertyHolds {
  int p = 0;
  int q = 0;
  PQDecision certificate;
};

/// Right branch: `subfamily` has p' members with no q' sharing a point, and the
/// remainder satisfies the (residual_p, residual_q) property.
struct SplitOff {
  IdSet subfamily;
  int residual_p = 0;
  int residual_q = 0;
  PQDecision residual;
  bool found_greedily = false;
};

using DichotomyResult = std::variant<SmallerPropertyHolds, SplitOff>;

/// Executes the (p,q) -> (p',q') dichotomy and re-verifies whichever branch it
/// returns. Throws PreconditionError naming the violated requirement.
DichotomyResult dichotomy_split(const Family& family, int p, int q, int p_small, int q_small,
                                Budget& budget);

/// Lexicographically first k-subfamily that is pairwise intersecting with no
/// three members sharing a point.
std::optional<IdSet> find_exactly_two_intersecting(const Family& family, int k, Budget& budget);

/// Maximum clique (Bron–Kerbosch with pivoting); lexicographically smallest on ties.
IdSet max_clique_exact(const IntersectionGraph& graph);

}  // namespace pq
