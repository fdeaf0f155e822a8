#include "pq/acceptance.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>

#include "pq/bounds.hpp"
#include "pq/clique.hpp"
#include "pq/errors.hpp"
#include "pq/family.hpp"
#include "pq/instances.hpp"
#include "pq/pierce.hpp"

namespace pq {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  // Records the first failure; later ones only bump the counter.
  void fail(const std::string& why) {
    if (passed) detail << "FAIL: " << why << "; ";
    passed = false;
    ++failures;
  }
  int failures = 0;
};

GenSpec polygons(int n, int grid, int radius, int vertices, std::uint64_t seed) {
  GenSpec s;
  s.kind = GenKind::kRandomPolygons;
  s.n = n;
  s.grid = grid;
  s.radius = radius;
  s.vertices = vertices;
  s.seed = seed;
  return s;
}

GenSpec crossing(int n, bool strips, std::uint64_t seed) {
  GenSpec s;
  s.kind = GenKind::kCrossingSegments;
  s.n = n;
  s.strips = strips;
  s.seed = seed;
  return s;
}

long ceil_of(const Rational& r) { return r.ceil().get_si(); }

// ---- 1: tight regime, n = p ------------------------------------------------
void tight_regime(Outcome& out, const BudgetLimits& limits) {
  int verified = 0, attempts = 0, spb = 0;
  std::uint64_t seed = 1;
  for (int round = 0; verified < 120 && round < 40; ++round) {
    for (int p = 3; p <= 9; ++p) {
      for (int q = 2; q <= p; ++q) {
        if (2 * q <= p + 2) continue;  // need q > p/2 + 1
        ++attempts;
        Budget budget(limits);
        const Family f = gen_family(polygons(p, 3, 5, 4, seed++));
        if (!has_pq_property(f, p, q, budget).holds) continue;
        ++verified;
        const auto size = exact_min_piercing(f, budget).size();
        if (size > static_cast<std::size_t>(p - q + 1)) {
          out.fail("piercing " + std::to_string(size) + " > p-q+1 at p=" + std::to_string(p) +
                   " q=" + std::to_string(q));
        }
      }
    }
  }
  for (int p = 3; p <= 9; ++p) {
    for (int q = 2; q <= p; ++q) {
      if (2 * q <= p + 2) continue;
      Budget budget(limits);
      GenSpec s;
      s.kind = GenKind::kSegmentsPlusBoxes;
      s.p = p;
      s.q = q;
      s.seed = static_cast<std::uint64_t>(p * 10 + q);
      const Family f = gen_family(s);
      if (!has_pq_property(f, p, q, budget).holds) out.fail("segments-plus-boxes misses (p,q)");
      ++verified;
      ++spb;
      const auto size = exact_min_piercing(f, budget).size();
      if (size != static_cast<std::size_t>(p - q + 1)) {
        out.fail("segments-plus-boxes piercing " + std::to_string(size) + " != p-q+1");
      }
    }
  }
  if (verified < 100) out.fail("only " + std::to_string(verified) + " verified families");
  out.detail << verified << " verified families (" << spb << " segments-plus-boxes, equality on all), "
             << attempts << " random draws";
}

// ---- 2: crossing segments --------------------------------------------------
void crossing_construction(Outcome& out, const BudgetLimits& limits) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Budget budget(limits);
      const auto size = exact_min_piercing(gen_family(crossing(n, false, seed)), budget).size();
      if (size != static_cast<std::size_t>((n + 1) / 2)) {
        out.fail("n=" + std::to_string(n) + " piercing " + std::to_string(size));
      }
    }
  }
  out.detail << "n=3..8, 3 seeds each, piercing = ceil(n/2)";
}

// ---- 3: de Caen ------------------------------------------------------------
void decaen(Outcome& out, const BudgetLimits& limits) {
  int instances = 0;
  std::uint64_t seed = 1000;
  while (instances < 120 && seed < 3000) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Family f = gen_family(polygons(n, 8 + static_cast<int>(seed % 7), 3, 4, seed));
    ++seed;
    for (int q = 2; q <= 3; ++q) {
      Budget budget(limits);
      const auto tuples = intersecting_tuples(f, q, budget);
      std::vector<std::vector<std::size_t>> edges;
      for (const auto& t : tuples) {
        std::vector<std::size_t> e;
        for (int id : t) e.push_back(f.position_of(id));
        edges.push_back(std::move(e));
      }
      const int alpha =
          static_cast<int>(hypergraph_max_independent_set(f.size(), edges, budget).size());
      const int p = alpha + 1;
      if (p < q || p > n) continue;
      ++instances;
      if (Rational(static_cast<long>(edges.size())) < decaen_bound(n, p, q)) {
        out.fail("edges below bound at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                 " q=" + std::to_string(q));
      }
    }
  }
  if (instances < 100) out.fail("only " + std::to_string(instances) + " instances");

  // All 2^10 graphs on 5 vertices: fewest edges with no independent 3-set.
  int min_edges = 11;
  for (unsigned g = 0; g < (1u << 10); ++g) {
    auto bit = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      const int idx = a * 5 - a * (a + 1) / 2 + (b - a - 1);
      return (g >> idx) & 1u;
    };
    bool independent_triple = false;
    for (int a = 0; a < 5 && !independent_triple; ++a)
      for (int b = a + 1; b < 5 && !independent_triple; ++b)
        for (int c = b + 1; c < 5 && !independent_triple; ++c)
          independent_triple = !bit(a, b) && !bit(a, c) && !bit(b, c);
    if (!independent_triple) min_edges = std::min(min_edges, __builtin_popcount(g));
  }
  const Rational b = decaen_bound(5, 3, 2);
  if (b != Rational(15, 4)) out.fail("decaen_bound(5,3,2) = " + b.str());
  if (ceil_of(b) != min_edges) out.fail("brute-force minimum " + std::to_string(min_edges));
  out.detail << instances << " instances; n=5 p=3 q=2: bound " << b.str() << ", true minimum "
             << min_edges;
}

// ---- 4: Kalai --------------------------------------------------------------
void kalai(Outcome& out, const BudgetLimits& limits) {
  int families = 0, checks = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const Family f = gen_family(polygons(n, 6 + static_cast<int>(seed % 9), 3, 4, seed));
    Budget budget(limits);
    const auto stats = tuple_stats(f, n, budget);
    const int r = stats.helly_residue.value_or(n - kPlaneDimension);
    ++families;
    for (int k = 1; k <= n; ++k) {
      ++checks;
      if (BigInt(static_cast<unsigned long>(stats.f[k - 1])) > kalai_bound(n, r, kPlaneDimension, k)) {
        out.fail("f exceeds bound at seed " + std::to_string(seed) + " k=" + std::to_string(k));
      }
    }
  }
  out.detail << families << " families, " << checks << " inequalities, " << out.failures
             << " violations";
}

// ---- 5: LP duality ---------------------------------------------------------
void lp_duality(Outcome& out, const BudgetLimits& limits) {
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 110; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const int vertices = seed % 4 == 0 ? 2 : 4;
    const Family f = gen_family(polygons(n, 8 + static_cast<int>(seed % 5), 4, vertices, seed));
    const LPResult lp = fractional_lps(f);
    ++instances;
    if (lp.primal_value != lp.dual_value) out.fail("primal != dual at seed " + std::to_string(seed));
    const Rational need = lp.alpha * lp.point_weights.total();
    for (const auto& b : f.bodies()) {
      if (covered_weight(b, lp.point_weights) < need) {
        out.fail("body " + std::to_string(b.id()) + " under-covered at seed " + std::to_string(seed));
      }
    }
    Budget budget(limits);
    const auto tau = exact_min_piercing(f, budget).size();
    if (lp.primal_value > Rational(static_cast<long>(tau))) out.fail("LP value above piercing number");
  }
  out.detail << instances << " instances, exact duality and alpha-coverage on all";
}

// ---- 6: deep point ---------------------------------------------------------
void depth_bound(Outcome& out, const BudgetLimits& limits) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200 && checked < 60; ++seed) {
    const int n = 8 + static_cast<int>(seed % 3);
    const Family f = gen_family(polygons(n, 3, 5, 4, seed + 500));
    for (int p = 3; p <= 4; ++p) {
      for (int q = 3; q <= p; ++q) {
        if (n < 2 * p) continue;
        Budget budget(limits);
        if (!has_pq_property(f, p, q, budget).holds) continue;
        ++checked;
        const Rational bound = piercing_fraction_bound({p, q, 2});
        const long need = ceil_of(bound * Rational(n));
        const auto deep = deepest_candidate(f);
        if (static_cast<long>(deep.depth) < need) {
          out.fail("depth " + std::to_string(deep.depth) + " < " + std::to_string(need));
        }
      }
    }
  }
  if (checked == 0) out.fail("no verified families with n >= 2p");
  out.detail << checked << " verified (p,q)-families with n >= 2p";
}

// ---- 7: weak nets ----------------------------------------------------------
bool interval_oracle_violates(const WeightedPoints& pts, const Rational& eps,
                              const std::vector<Point2>& net) {
  // Support on the x-axis: a hull misses the net iff it fits in a net-free gap.
  const Rational threshold = eps * pts.total();
  const auto& e = pts.entries();  // sorted by x
  Rational run;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) {
      const Rational& a = e[i - 1].point.x;
      const Rational& b = e[i].point.x;
      for (const auto& x : net) {
        if (x.y == Rational(0) && a <= x.x && x.x <= b) run = Rational();
      }
    }
    bool on_point = false;
    for (const auto& x : net) on_point = on_point || x == e[i].point;
    if (on_point) {
      run = Rational();
      continue;
    }
    run += e[i].weight;
    if (threshold.sign() <= 0 || run >= threshold) return true;
  }
  return false;
}

void weak_nets(Outcome& out, const BudgetLimits& limits) {
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  int nets = 0;
  std::size_t largest = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec s;
    s.kind = GenKind::kGridPoints;
    s.n = 4 + static_cast<int>(seed % 11);
    s.grid = 8;
    s.max_weight = 3;
    s.seed = seed;
    const auto pts = std::get<WeightedPoints>(gen(s));
    const Rational& eps = epsilons[seed % 3];
    Budget budget(limits);
    const WeakNet net = weak_epsilon_net(pts, eps, budget);
    Budget check(limits);
    if (verify_weak_net(pts, eps, net.points, check)) out.fail("unverified net at seed " + std::to_string(seed));
    largest = std::max(largest, net.points.size());
    ++nets;
  }
  if (nets < 50) out.fail("fewer than 50 nets");

  // 1-D cross-check against interval reasoning.
  int oracle_cases = 0;
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<WeightedPoint> raw;
    const int m = static_cast<int>(rng.uniform(2, 9));
    for (int i = 0; i < m; ++i) {
      raw.push_back({{Rational(rng.uniform(0, 12)), Rational(0)}, Rational(rng.uniform(1, 3))});
    }
    const WeightedPoints pts(std::move(raw));
    std::vector<Point2> net;
    const int k = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < k; ++i) {
      const long off = rng.uniform(0, 4) == 0 ? 1 : 0;  // sometimes off the line
      net.push_back({Rational(rng.uniform(0, 24), 2L), Rational(off)});
    }
    const Rational& eps = epsilons[trial % 3];
    Budget budget(limits);
    const auto found = verify_weak_net(pts, eps, net, budget);
    ++oracle_cases;
    if (found.has_value() != interval_oracle_violates(pts, eps, net)) {
      out.fail("verifier disagrees with interval oracle on trial " + std::to_string(trial));
    }
    if (found) {
      Rational w;
      std::vector<Point2> sub;
      for (auto i : *found) {
        w += pts.entries()[i].weight;
        sub.push_back(pts.entries()[i].point);
      }
      const ConvexBody hull(sub);
      if (w < eps * pts.total()) out.fail("reported subset too light");
      for (const auto& x : net) {
        if (hull.contains(x)) out.fail("reported subset hull meets the net");
      }
    }
  }
  out.detail << nets << " nets verified (largest " << largest << " points); " << oracle_cases
             << " 1-D oracle comparisons";
}

// ---- 8: max clique ---------------------------------------------------------
void check_clique(Outcome& out, const Family& f, const BudgetLimits& limits, const char* suite) {
  const auto rep = approx_max_clique(f, true);
  for (int id : rep.approx_clique) {
    if (!f[f.position_of(id)].contains(rep.witness_point)) {
      out.fail(std::string(suite) + ": witness misses body " + std::to_string(id));
    }
  }
  Budget budget(limits);
  const Family clique = f.subfamily(*rep.exact_clique);
  const long t = static_cast<long>(exact_min_piercing(clique, budget).size());
  const long exact = static_cast<long>(*rep.exact_clique_size);
  const long need = (exact + t - 1) / t;
  if (static_cast<long>(rep.approx_clique.size()) < need) {
    out.fail(std::string(suite) + ": |approx| < ceil(exact/T)");
  }
}

void max_clique(Outcome& out, const BudgetLimits& limits) {
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec s;
    s.kind = GenKind::kDiscPolygons;
    s.n = 5 + static_cast<int>(seed % 5);
    s.grid = 12;
    s.radius = 5;
    s.vertices = 6;
    s.seed = seed;
    check_clique(out, gen_family(s), limits, "disc");
    ++instances;
    check_clique(out, gen_family(polygons(5 + static_cast<int>(seed % 5), 10, 5, 2, seed)),
                 limits, "segments");
    ++instances;
  }
  for (int n = 3; n <= 8; ++n) {
    check_clique(out, gen_family(crossing(n, false, static_cast<std::uint64_t>(n))), limits,
                 "crossing");
    ++instances;
  }
  // Triangle sides: pairwise intersecting at corners, no common point.
  const Point2 a{0, 0}, b{4, 0}, c{0, 4};
  const Family tri({ConvexBody({a, b}, 0), ConvexBody({b, c}, 1), ConvexBody({c, a}, 2)});
  const auto rep = approx_max_clique(tri, true);
  if (!rep.ratio || *rep.ratio != Rational(2, 3)) out.fail("triangle ratio is not 2/3");
  out.detail << instances << " instances; triangle ratio "
             << (rep.ratio ? rep.ratio->str() : std::string("n/a"));
}

// ---- 9: union complexity of exactly 2-intersecting families ---------------
void exactly_two(Outcome& out, const BudgetLimits& limits) {
  int tight = 0, strict = 0;
  for (int k = 3; k <= 7; ++k) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Budget b1(limits), b2(limits);
      const auto seg = exactly_two_union_check(gen_family(crossing(k, false, seed)), b1);
      if (seg.union_complexity != binomial(k, 2)) {
        out.fail("segments not tight at k=" + std::to_string(k));
      } else {
        ++tight;
      }
      const auto strip = exactly_two_union_check(gen_family(crossing(k, true, seed)), b2);
      if (BigInt(static_cast<unsigned long>(strip.union_complexity)) <= binomial(k, 2)) {
        out.fail("strips not strictly above C(k,2) at k=" + std::to_string(k));
      } else {
        ++strict;
      }
    }
  }
  out.detail << tight << " segment families with equality, " << strict
             << " strip families strictly above C(k,2)";
}

// ---- 10: bound calculators -------------------------------------------------
void calculators(Outcome& out, const BudgetLimits&) {
  const Rational a = exponent_a({3, 3, 2});
  if (a != Rational(4)) out.fail("exponent_a(2,3) = " + a.str());
  if (alon_kleitman_exponent(2) != 6) out.fail("Alon-Kleitman exponent != 6");
  const auto tight = hd_regime({7, 5, 2});
  if (tight.regime != Regime::kHdTight || tight.upper_exact != 3) out.fail("(7,5,2) not tight with 3");
  const auto gen = hd_regime({4, 3, 2});
  if (gen.regime != Regime::kGeneral) out.fail("(4,3,2) not GENERAL_A");
  if (gen.notes.find("3 ≤ HD_2(4,3) ≤ 13") == std::string::npos) out.fail("bracket missing from note");
  out.detail << "exponent_a=" << a.str() << ", AK exponent " << alon_kleitman_exponent(2)
             << ", (7,5,2) " << regime_name(tight.regime) << " upper "
             << tight.upper_exact.value_or(-1) << ", (4,3,2) " << regime_name(gen.regime);
}

struct Criterion {
  const char* name;
  double limit;
  void (*run)(Outcome&, const BudgetLimits&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"tight regime: piercing <= p-q+1 for n = p", 120, tight_regime},
    {"crossing segments need ceil(n/2) points", 60, crossing_construction},
    {"q-tuple counts meet the de Caen bound", 120, decaen},
    {"tuple counts obey the upper bound theorem", 120, kalai},
    {"exact LP duality and alpha-coverage", 180, lp_duality},
    {"deep point meets the explicit fraction bound", 60, depth_bound},
    {"weak epsilon-nets pass the exhaustive verifier", 180, weak_nets},
    {"max-clique approximation guarantees", 120, max_clique},
    {"union complexity of exactly 2-intersecting families", 60, exactly_two},
    {"bound calculators", 1, calculators},
};

}  // namespace

CriterionResult run_criterion(int id, const BudgetLimits& limits) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id must be 1..10");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.name = c.name;
  res.limit_seconds = c.limit;
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(out, limits);
  } catch (const std::exception& e) {
    out.fail(std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.seconds > c.limit) out.fail("runtime limit exceeded");
  res.passed = out.passed;
  res.detail = out.detail.str();
  return res;
}

std::vector<CriterionResult> run_acceptance(const BudgetLimits& limits) {
  std::vector<CriterionResult> all;
  for (int id = 1; id <= kCriterionCount; ++id) all.push_back(run_criterion(id, limits));
  return all;
}

}  // namespace pq
