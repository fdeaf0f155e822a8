#pragma once

#include <optional>
#include <vector>

#include "pq/family.hpp"
#include "pq/pierce.hpp"

namespace pq {

struct UnionComplexityReport {
  std::size_t vertex_count = 0;
  std::vector<Point2> vertices;  // boundary crossings not interior to any body
  int k = 0;                     // family size
  BigInt threshold;              // C(k,2)
};

/// Boundary-boundary crossings of pairs that lie on the boundary of the union,
/// i.e. outside the planar interior of every body. Points and segments have
/// empty interior, so every crossing involving only them counts.
UnionComplexityReport union_complexity(const Family& family);

struct UnionConditionResult {
  bool holds = true;                   // every k-subfamily has complexity < C(k,2)
  std::optional<IdSet> violating;      // first k-subfamily that does not
  std::size_t violating_complexity = 0;
  std::uint64_t subfamilies_checked = 0;
};

UnionConditionResult check_union_condition(const Family& family, int k, Budget& budget);

struct ExactlyTwoUnionRecord {
  int k = 0;
  std::size_t union_complexity = 0;
  BigInt threshold;  // C(k,2)
  bool tight = false;
};

/// Union complexity of an exactly 2-intersecting family of k >= 3 bodies is at
/// least C(k,2). Throws PreconditionError when the family is not exactly
/// 2-intersecting and VerificationFailure if the inequality fails.
ExactlyTwoUnionRecord exactly_two_union_check(const Family& family, Budget& budget);

struct CliqueApproxReport {
  IdSet approx_clique;
  Point2 witness_point;
  std::optional<std::size_t> exact_clique_size;
  std::optional<IdSet> exact_clique;
  std::optional<Rational> ratio;
};

/// Deepest arrangement cell, found through candidate-point depths.
CliqueApproxReport approx_max_clique(const Family& family, bool compute_exact);

struct TripleForcingRecord {
  int p = 0;
  int k = 0;
  std::optional<int> smallest_m;   // every m-subfamily has an intersecting triple
  BigInt ramsey_bound;             // k p^4
  std::uint64_t subfamilies_checked = 0;
  std::uint64_t cliques_confirmed = 0;  // k-cliques found to contain a triple
};

/// Desk-scale check of the (p,2) + no exactly-2-intersecting k-subfamily
/// implication. Throws PreconditionError when either hypothesis fails.
TripleForcingRecord triple_forcing_check(const Family& family, int p, int k, Budget& budget);

}  // namespace pq
