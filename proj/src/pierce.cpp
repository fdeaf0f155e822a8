#include "pq/pierce.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "pq/errors.hpp"
#include "pq/simplex.hpp"

namespace pq {

PiercingSet certify_piercing(const Family& family, std::vector<Point2> points, const char* stage) {
  PiercingSet set{std::move(points), {}};
  for (const auto& body : family.bodies()) {
    auto it = std::find_if(set.points.begin(), set.points.end(),
                           [&](const Point2& p) { return body.contains(p); });
    if (it == set.points.end()) {
      throw VerificationFailure(stage, "body " + std::to_string(body.id()) + " is not pierced");
    }
    set.certificate[body.id()] = static_cast<std::size_t>(it - set.points.begin());
  }
  return set;
}

bool is_valid_piercing(const Family& family, const PiercingSet& set) {
  for (const auto& body : family.bodies()) {
    auto it = set.certificate.find(body.id());
    if (it == set.certificate.end() || it->second >= set.points.size()) return false;
    if (!body.contains(set.points[it->second])) return false;
  }
  return true;
}

WeightedPoints::WeightedPoints(std::vector<WeightedPoint> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.point < b.point; });
  for (auto& e : entries) {
    if (e.weight.sign() <= 0) throw PreconditionError("point weights must be positive");
    total_ += e.weight;
    if (!entries_.empty() && entries_.back().point == e.point) {
      entries_.back().weight += e.weight;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

std::vector<Point2> WeightedPoints::support() const {
  std::vector<Point2> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.point);
  return out;
}

Rational covered_weight(const ConvexBody& body, const WeightedPoints& points) {
  Rational w;
  for (const auto& e : points.entries()) {
    if (body.contains(e.point)) w += e.weight;
  }
  return w;
}

namespace {

using Mask = std::uint64_t;

struct Column {
  Point2 point;
  Mask cover = 0;
  int depth = 0;
};

// Candidate columns with their cover masks, dominated columns removed, ordered
// by depth (descending) then point.
std::vector<Column> cover_columns(const Family& family, std::size_t* candidate_count = nullptr) {
  if (family.size() > 64) throw BudgetExceeded("set cover supports at most 64 bodies");
  const auto cands = candidate_points(family.bodies());
  if (candidate_count) *candidate_count = cands.size();
  std::vector<Column> cols;
  cols.reserve(cands.size());
  for (const auto& p : cands) {
    Column c{p, 0, 0};
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].contains(p)) c.cover |= Mask{1} << i;
    }
    c.depth = std::popcount(c.cover);
    cols.push_back(std::move(c));
  }
  std::stable_sort(cols.begin(), cols.end(),
                   [](const Column& a, const Column& b) { return a.depth > b.depth; });
  std::vector<Column> kept;
  for (auto& c : cols) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Column& k) {
      return (c.cover & k.cover) == c.cover;
    });
    if (!dominated) kept.push_back(std::move(c));
  }
  return kept;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

DeepestPoint deepest_candidate(const Family& family) {
  DeepestPoint best;
  bool any = false;
  for (const auto& p : candidate_points(family.bodies())) {
    std::size_t depth = 0;
    for (const auto& b : family.bodies()) depth += b.contains(p) ? 1 : 0;
    if (!any || depth > best.depth) {
      best.point = p;
      best.depth = depth;
      any = true;
    }
  }
  for (const auto& b : family.bodies()) {
    if (b.contains(best.point)) best.members.push_back(b.id());
  }
  return best;
}

PiercingSet greedy_piercing(const Family& family) {
  const auto cands = candidate_points(family.bodies());
  std::vector<bool> covered(family.size(), false);
  std::size_t left = family.size();
  std::vector<Point2> chosen;
  while (left > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!covered[i] && family[i].contains(cands[c])) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw VerificationFailure("greedy", "candidate points miss a body");
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!covered[i] && family[i].contains(cands[best])) {
        covered[i] = true;
        --left;
      }
    }
    chosen.push_back(cands[best]);
  }
  return certify_piercing(family, std::move(chosen), "greedy");
}

PiercingSet exact_min_piercing(const Family& family, Budget& budget) {
  const auto cols = cover_columns(family);
  const std::size_t n = family.size();
  const Mask all = full_mask(n);

  std::vector<std::vector<std::size_t>> covering(n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cols[c].cover >> i & 1) covering[i].push_back(c);
    }
  }

  const auto greedy = greedy_piercing(family);
  const LPResult lp = fractional_lps(family);
  const long lower = std::max<long>(1, lp.primal_value.ceil().get_si());

  std::vector<std::size_t> picked;
  std::function<bool(Mask, std::size_t)> search = [&](Mask uncovered, std::size_t k) -> bool {
    budget.charge_work(1, "exact piercing search");
    if (uncovered == 0) return true;
    if (k == 0) return false;
    // Cheap bound: the best column covers at most `widest` of what is left.
    int widest = 0;
    for (const auto& c : cols) widest = std::max(widest, std::popcount(c.cover & uncovered));
    if (static_cast<std::size_t>((std::popcount(uncovered) + widest - 1) / widest) > k) {
      return false;
    }
    // Branch on the uncovered body with the fewest covering columns.
    std::size_t body = n;
    for (std::size_t i = 0; i < n; ++i) {
      if ((uncovered >> i & 1) && (body == n || covering[i].size() < covering[body].size())) {
        body = i;
      }
    }
    for (auto c : covering[body]) {
      picked.push_back(c);
      if (search(uncovered & ~cols[c].cover, k - 1)) return true;
      picked.pop_back();
    }
    return false;
  };

  for (auto k = static_cast<std::size_t>(lower); k < greedy.size(); ++k) {
    picked.clear();
    if (search(all, k)) {
      std::vector<Point2> pts;
      for (auto c : picked) pts.push_back(cols[c].point);
      return certify_piercing(family, std::move(pts), "exact-piercing");
    }
  }
  return greedy;
}

LPResult fractional_lps(const Family& family) {
  LPResult res;
  const auto cols = cover_columns(family, &res.candidate_count);
  const std::size_t n = family.size();
  const std::size_t m = cols.size();
  res.column_count = m;

  // Fractional transversal: min sum x_c, each body covered at least once.
  LinearProgram primal;
  primal.objective.assign(m, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t c = 0; c < m; ++c) {
      if (cols[c].cover >> i & 1) row[c] = 1;
    }
    primal.add_row(std::move(row), Sense::kGreaterEqual, Rational(1));
  }
  // Fractional matching: max sum y_b, each candidate point loaded at most once.
  LinearProgram dual;
  dual.objective.assign(n, Rational(-1));
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (cols[c].cover >> i & 1) row[i] = 1;
    }
    dual.add_row(std::move(row), Sense::kLessEqual, Rational(1));
  }

  const LpSolution ps = solve_lp(primal);
  const LpSolution ds = solve_lp(dual);
  if (ps.status != LpStatus::kOptimal || ds.status != LpStatus::kOptimal) {
    throw VerificationFailure("lp", "transversal or matching LP did not reach an optimum");
  }
  res.primal_value = ps.value;
  res.dual_value = -ds.value;
  res.pivots = ps.pivots + ds.pivots;
  if (res.primal_value != res.dual_value) {
    throw VerificationFailure("lp", "primal " + res.primal_value.str() + " != dual " +
                                        res.dual_value.str());
  }
  res.alpha = Rational(1) / res.primal_value;

  std::vector<WeightedPoint> wp;
  for (std::size_t c = 0; c < m; ++c) {
    if (ps.x[c].sign() > 0) wp.push_back({cols[c].point, ps.x[c] / res.primal_value});
  }
  res.point_weights = WeightedPoints(std::move(wp));
  for (std::size_t i = 0; i < n; ++i) res.set_weights[family[i].id()] = ds.x[i];

  for (const auto& body : family.bodies()) {
    if (covered_weight(body, res.point_weights) < res.alpha * res.point_weights.total()) {
      throw VerificationFailure("lp", "body " + std::to_string(body.id()) +
                                          " receives less than alpha * W");
    }
  }
  return res;
}

std::optional<std::vector<std::size_t>> verify_weak_net(const WeightedPoints& points,
                                                        const Rational& eps,
                                                        const std::vector<Point2>& net,
                                                        Budget& budget) {
  const auto& e = points.entries();
  if (e.size() > 62) throw BudgetExceeded("weak-net verifier supports at most 62 support points");
  const Rational threshold = eps * points.total();
  // Suffix sums for the weight bound.
  std::vector<Rational> suffix(e.size() + 1);
  for (std::size_t i = e.size(); i-- > 0;) suffix[i] = suffix[i + 1] + e[i].weight;

  std::vector<std::size_t> chosen;
  std::vector<Point2> pts;
  // Sets whose hull meets the net are pruned together with all supersets.
  std::function<bool(std::size_t, const Rational&)> dfs = [&](std::size_t start,
                                                              const Rational& weight) -> bool {
    if (!chosen.empty() && weight >= threshold) return true;
    for (std::size_t i = start; i < e.size(); ++i) {
      if (weight + suffix[i] < threshold) return false;
      budget.charge_work(1, "weak-net verifier");
      pts.push_back(e[i].point);
      const ConvexBody hull(pts);
      const bool hits = std::any_of(net.begin(), net.end(),
                                    [&](const Point2& x) { return hull.contains(x); });
      if (!hits) {
        chosen.push_back(i);
        if (dfs(i + 1, weight + e[i].weight)) return true;
        chosen.pop_back();
      }
      pts.pop_back();
    }
    return false;
  };
  if (threshold.sign() <= 0) {
    // Every nonempty convex set is heavy; only a net hitting every support point survives.
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (std::find(net.begin(), net.end(), e[i].point) == net.end()) {
        return std::vector<std::size_t>{i};
      }
    }
    return std::nullopt;
  }
  if (dfs(0, Rational())) return chosen;
  return std::nullopt;
}

namespace {

// Coordinates at cumulative weight j*W/s, j = 1..s-1, along one axis.
std::vector<Rational> weighted_quantiles(const WeightedPoints& points, long slabs, bool use_x) {
  std::vector<std::pair<Rational, Rational>> axis;  // coordinate, weight
  for (const auto& e : points.entries()) axis.emplace_back(use_x ? e.point.x : e.point.y, e.weight);
  std::sort(axis.begin(), axis.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> out;
  Rational cum;
  std::size_t idx = 0;
  for (long j = 1; j < slabs; ++j) {
    const Rational target = Rational(j) * points.total() / Rational(slabs);
    while (idx < axis.size() && cum + axis[idx].second < target) cum += axis[idx++].second;
    if (idx < axis.size()) out.push_back(axis[idx].first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

WeakNet weak_epsilon_net(const WeightedPoints& points, const Rational& eps, Budget& budget) {
  if (eps.sign() <= 0 || eps > Rational(1)) throw PreconditionError("weak net requires 0 < eps <= 1");
  if (points.size() == 0) throw PreconditionError("weak net of an empty point set");
  const long slabs = (Rational(2) / eps).ceil().get_si();
  WeakNet net;
  const auto xs = weighted_quantiles(points, slabs, true);
  const auto ys = weighted_quantiles(points, slabs, false);
  for (const auto& x : xs) {
    for (const auto& y : ys) net.points.push_back({x, y});
  }
  net.grid_points = net.points.size();
  while (auto bad = verify_weak_net(points, eps, net.points, budget)) {
    if (net.repairs >= budget.limits().repair_cap) {
      throw BudgetExceeded("weak-net repair cap of " + std::to_string(budget.limits().repair_cap) +
                           " exceeded");
    }
    std::vector<Point2> hull_pts;
    for (auto i : *bad) hull_pts.push_back(points.entries()[i].point);
    net.points.push_back(centroid(hull_pts));
    ++net.repairs;
  }
  // Drop points the net can do without, newest first; each removal is re-verified.
  for (std::size_t i = net.points.size(); i-- > 0;) {
    std::vector<Point2> trial = net.points;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!verify_weak_net(points, eps, trial, budget)) {
      net.points = std::move(trial);
      ++net.pruned;
    }
  }
  return net;
}

PipelineReport ak_pipeline(const Family& family, const PQParams& params, Budget& budget) {
  if (params.d != kPlaneDimension) throw PreconditionError("pipeline is implemented for d = 2");
  if (params.q < params.d + 1) throw PreconditionError("pipeline requires q >= d + 1");
  if (!has_pq_property(family, params.p, params.q, budget).holds) {
    throw PreconditionError("family does not satisfy the (" + std::to_string(params.p) + "," +
                            std::to_string(params.q) + ")-property");
  }
  PipelineReport rep;
  rep.params = params;
  rep.n = family.size();
  const int n = static_cast<int>(rep.n);

  // Stage 1: intersecting-tuple counts against the hypergraph and nerve bounds.
  rep.stats = tuple_stats(family, n, budget);
  rep.decaen = decaen_bound(n, params.p, params.q);
  if (Rational(static_cast<long>(rep.stats.f[params.q - 1])) < rep.decaen) {
    throw VerificationFailure("tuple-stats", "intersecting q-tuples below the de Caen bound");
  }
  // With no empty level visible, f_n = 0 holds vacuously.
  rep.kalai_residue = rep.stats.helly_residue.value_or(std::max(0, n - params.d));
  for (int k = 1; k <= n; ++k) {
    rep.kalai.push_back(kalai_bound(n, rep.kalai_residue, params.d, k));
    if (BigInt(static_cast<unsigned long>(rep.stats.f[k - 1])) > rep.kalai.back()) {
      throw VerificationFailure("tuple-stats", "f exceeds the upper bound theorem");
    }
  }

  // Stage 2: a point of large depth.
  rep.deepest = deepest_candidate(family);
  rep.depth_fraction_bound = piercing_fraction_bound(params);
  if (n >= 2 * params.p) {
    rep.depth_check_applied = true;
    const BigInt need = (rep.depth_fraction_bound * Rational(n)).ceil();
    if (BigInt(static_cast<unsigned long>(rep.deepest.depth)) < need) {
      throw VerificationFailure("depth", "deepest point is shallower than the fraction bound");
    }
  }

  // Stage 3: weighted points realizing the measured alpha.
  rep.lp = fractional_lps(family);

  // Stage 4: a weak net at eps = alpha pierces every body.
  rep.net = weak_epsilon_net(rep.lp.point_weights, rep.lp.alpha, budget);
  rep.transversal = certify_piercing(family, rep.net.points, "net");
  return rep;
}

}  // namespace pq
