#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pq/bounds.hpp"
#include "pq/family.hpp"

namespace pq {

/// Transversal with a per-body witness: body id -> index into `points`.
struct PiercingSet {
  std::vector<Point2> points;
  std::map<int, std::size_t> certificate;

  std::size_t size() const { return points.size(); }
};

/// Assigns every body its first containing point. Throws VerificationFailure
/// (stage `stage`) if some body is missed.
PiercingSet certify_piercing(const Family& family, std::vector<Point2> points,
                             const char* stage = "piercing");

/// Exact containment re-check of every certificate entry.
bool is_valid_piercing(const Family& family, const PiercingSet& set);

struct WeightedPoint {
  Point2 point;
  Rational weight;
};

/// Point multiset with positive rational weights; equal points are merged.
class WeightedPoints {
 public:
  WeightedPoints() = default;
  explicit WeightedPoints(std::vector<WeightedPoint> entries);

  const std::vector<WeightedPoint>& entries() const { return entries_; }
  const Rational& total() const { return total_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<Point2> support() const;

 private:
  std::vector<WeightedPoint> entries_;
  Rational total_;
};

struct DeepestPoint {
  Point2 point;
  std::size_t depth = 0;
  IdSet members;
};

/// Candidate point of maximum depth; lexicographically smallest on ties.
DeepestPoint deepest_candidate(const Family& family);

/// Minimum transversal by iterative-deepening set cover over candidate points,
/// seeded with the LP lower bound. Requires n <= 64.
PiercingSet exact_min_piercing(const Family& family, Budget& budget);

/// Repeatedly takes the candidate of largest residual depth.
PiercingSet greedy_piercing(const Family& family);

struct LPResult {
  Rational primal_value;  // fractional transversal number
  Rational dual_value;    // fractional matching number
  WeightedPoints point_weights;  // normalized: total weight 1
  std::map<int, Rational> set_weights;
  Rational alpha;  // 1 / primal_value
  std::size_t candidate_count = 0;
  std::size_t column_count = 0;  // candidates left after dropping dominated ones
  std::uint64_t pivots = 0;
};

/// Solves the fractional transversal LP and the fractional matching LP
/// separately and checks that their optima agree.
LPResult fractional_lps(const Family& family);

/// Weight of `points` that lies in `body`.
Rational covered_weight(const ConvexBody& body, const WeightedPoints& points);

/// A support subset (indices) of weight >= eps*W whose hull misses `net`.
std::optional<std::vector<std::size_t>> verify_weak_net(const WeightedPoints& points,
                                                        const Rational& eps,
                                                        const std::vector<Point2>& net,
                                                        Budget& budget);

struct WeakNet {
  std::vector<Point2> points;
  std::size_t grid_points = 0;
  std::size_t repairs = 0;
  std::size_t pruned = 0;  // points removed after repair
};

/// Quantile grid followed by verifier-driven repair. Never returns an
/// unverified net; throws BudgetExceeded when the repair cap is hit.
WeakNet weak_epsilon_net(const WeightedPoints& points, const Rational& eps, Budget& budget);

struct PipelineReport {
  PQParams params;
  std::size_t n = 0;
  TupleStats stats;
  Rational decaen;  // lower bound on f[q-1]
  int kalai_residue = 0;
  std::vector<BigInt> kalai;  // kalai[k-1] bounds f[k-1]
  DeepestPoint deepest;
  Rational depth_fraction_bound;
  bool depth_check_applied = false;  // only when n >= 2p
  LPResult lp;
  WeakNet net;
  PiercingSet transversal;
};

/// Four-stage piercing pipeline: tuple counts, a deep point, the LP weighting,
/// and a weak net at the measured alpha. Each stage verifies itself; a failure
/// raises VerificationFailure naming the stage.
PipelineReport ak_pipeline(const Family& family, const PQParams& params, Budget& budget);

}  // namespace pq
