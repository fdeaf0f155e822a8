#include "pq/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "pq/errors.hpp"

namespace pq {

namespace {

struct KindName {
  GenKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {GenKind::kCrossingSegments, "crossing-segments"},
    {GenKind::kDisjoint, "disjoint"},
    {GenKind::kConcentric, "concentric"},
    {GenKind::kSegmentsPlusBoxes, "segments-plus-boxes"},
    {GenKind::kRandomPolygons, "random-polygons"},
    {GenKind::kDiscPolygons, "disc-polygons"},
    {GenKind::kGridPoints, "grid-points"},
};

constexpr int kRetries = 64;

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

struct Line {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& x) const { return slope * x + intercept; }
};

Rational crossing_x(const Line& a, const Line& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

bool has_concurrent_triple(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational x = crossing_x(lines[i], lines[j]);
      const Rational y = lines[i].at(x);
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        if (lines[k].at(x) == y) return true;
      }
    }
  }
  return false;
}

bool is_exactly_two_intersecting(const Family& f) {
  Budget budget;
  const auto g = intersection_graph(f);
  if (g.edge_count() != f.size() * (f.size() - 1) / 2) return false;
  return f.size() < 3 || intersecting_tuples(f, 3, budget).empty();
}

Family crossing_segments(const GenSpec& spec) {
  if (spec.n < 1) throw PreconditionError("crossing-segments requires n >= 1");
  Rng rng(spec.seed);
  const long spread = 4L * spec.n + 4;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    // Distinct slopes 1, 1/2, 1/3, ... so no two lines are parallel.
    std::vector<Line> lines;
    for (int i = 0; i < spec.n; ++i) {
      lines.push_back({Rational(1, i + 1), Rational(rng.uniform(-spread, spread))});
    }
    if (has_concurrent_triple(lines)) continue;

    Rational lo = 0, hi = 0;
    bool first = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Rational x = crossing_x(lines[i], lines[j]);
        if (first || x < lo) lo = x;
        if (first || x > hi) hi = x;
        first = false;
      }
    }
    const Rational x0 = Rational(BigInt(lo.floor() - 1));
    const Rational x1 = Rational(BigInt(hi.ceil() + 1));

    // Strips are thickened until no triple overlaps appear.
    Rational half_width = spec.strips ? Rational(1, 4) : Rational(0);
    for (int shrink = 0; shrink < 40; ++shrink) {
      std::vector<ConvexBody> bodies;
      for (int i = 0; i < spec.n; ++i) {
        const auto& l = lines[i];
        if (!spec.strips) {
          bodies.emplace_back(std::initializer_list<Point2>{{x0, l.at(x0)}, {x1, l.at(x1)}}, i);
        } else {
          bodies.emplace_back(std::initializer_list<Point2>{{x0, l.at(x0) - half_width},
                                                            {x1, l.at(x1) - half_width},
                                                            {x1, l.at(x1) + half_width},
                                                            {x0, l.at(x0) + half_width}},
                              i);
        }
      }
      Family fam(std::move(bodies));
      if (is_exactly_two_intersecting(fam)) return fam;
      if (!spec.strips) break;
      half_width /= Rational(2);
    }
  }
  throw VerificationFailure("gen", "could not place crossing segments in general position");
}

Family disjoint(const GenSpec& spec) {
  if (spec.n < 1) throw PreconditionError("disjoint requires n >= 1");
  Rng rng(spec.seed);
  std::vector<ConvexBody> bodies;
  for (int i = 0; i < spec.n; ++i) {
    // Cell (i mod 8, i div 8) of side 10; shapes stay inside [1,9]^2 of it.
    const long ox = 10L * (i % 8), oy = 10L * (i / 8);
    std::vector<Point2> pts;
    const int count = static_cast<int>(rng.uniform(3, 5));
    for (int v = 0; v < count; ++v) pts.push_back(pt(ox + rng.uniform(1, 9), oy + rng.uniform(1, 9)));
    bodies.emplace_back(pts, i);
  }
  return Family(std::move(bodies));
}

Family concentric(const GenSpec& spec) {
  if (spec.n < 1) throw PreconditionError("concentric requires n >= 1");
  Rng rng(spec.seed);
  std::vector<ConvexBody> bodies;
  long r = 0;
  for (int i = 0; i < spec.n; ++i) {
    r += rng.uniform(1, 3);
    bodies.emplace_back(std::initializer_list<Point2>{pt(-r, -r), pt(r, -r), pt(r, r), pt(-r, r)}, i);
  }
  return Family(std::move(bodies));
}

Family segments_plus_boxes(const GenSpec& spec) {
  if (!(spec.p >= spec.q && spec.q >= 2)) {
    throw PreconditionError("segments-plus-boxes requires p >= q >= 2");
  }
  Rng rng(spec.seed);
  const int segs = spec.p - spec.q + 1;
  std::vector<ConvexBody> bodies;
  long max_x = 0;
  for (int j = 0; j < segs; ++j) {
    const long a = rng.uniform(0, 3);
    const long b = a + 1 + rng.uniform(0, 3);
    max_x = std::max(max_x, b);
    bodies.emplace_back(std::initializer_list<Point2>{pt(a, 2L * j), pt(b, 2L * j)}, j);
  }
  for (int t = 0; t < spec.q - 1; ++t) {
    const long lo = -1 - t;
    const long hx = max_x + 1 + t;
    const long hy = 2L * segs + t;
    bodies.emplace_back(std::initializer_list<Point2>{pt(lo, lo), pt(hx, lo), pt(hx, hy), pt(lo, hy)},
                        segs + t);
  }
  return Family(std::move(bodies));
}

Family random_polygons(const GenSpec& spec) {
  if (spec.n < 1 || spec.grid < 1 || spec.vertices < 1 || spec.radius < 0) {
    throw PreconditionError("random-polygons requires n, grid, vertices >= 1 and radius >= 0");
  }
  Rng rng(spec.seed);
  std::vector<ConvexBody> bodies;
  for (int i = 0; i < spec.n; ++i) {
    const long cx = rng.uniform(0, spec.grid), cy = rng.uniform(0, spec.grid);
    std::vector<Point2> pts;
    for (int v = 0; v < spec.vertices; ++v) {
      pts.push_back(pt(cx + rng.uniform(-spec.radius, spec.radius),
                       cy + rng.uniform(-spec.radius, spec.radius)));
    }
    bodies.emplace_back(pts, i);
  }
  return Family(std::move(bodies));
}

// Polygon inscribed in a disc: vertices are exact rational points of the
// circle, (r (1-t^2)/(1+t^2), r 2t/(1+t^2)) for rational t.
Family disc_polygons(const GenSpec& spec) {
  if (spec.n < 1 || spec.grid < 0 || spec.vertices < 3 || spec.radius < 1) {
    throw PreconditionError("disc-polygons requires n >= 1, vertices >= 3, radius >= 1");
  }
  Rng rng(spec.seed);
  std::vector<ConvexBody> bodies;
  for (int i = 0; i < spec.n; ++i) {
    const long cx = rng.uniform(0, spec.grid), cy = rng.uniform(0, spec.grid);
    const long r = rng.uniform(1, spec.radius);
    const double phase = static_cast<double>(rng.uniform(0, 999)) / 1000.0;
    std::vector<Point2> pts;
    for (int v = 0; v < spec.vertices; ++v) {
      // Offsets in [0.05, 0.95) keep theta/2 away from the pole of tan at -pi/2.
      const double theta =
          -std::numbers::pi + (v + 0.05 + 0.9 * phase) * 2 * std::numbers::pi / spec.vertices;
      const Rational t(std::lround(std::tan(theta / 2) * 64), 64L);
      const Rational one_t2 = Rational(1) + t * t;
      pts.push_back({Rational(cx) + Rational(r) * (Rational(1) - t * t) / one_t2,
                     Rational(cy) + Rational(r) * Rational(2) * t / one_t2});
    }
    bodies.emplace_back(pts, i);
  }
  return Family(std::move(bodies));
}

WeightedPoints grid_points(const GenSpec& spec) {
  if (spec.grid < 1 || spec.n < 1 || spec.n > spec.grid * spec.grid || spec.max_weight < 1) {
    throw PreconditionError("grid-points requires 1 <= n <= grid^2 and max_weight >= 1");
  }
  Rng rng(spec.seed);
  std::vector<long> cells(static_cast<std::size_t>(spec.grid) * spec.grid);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<long>(i);
  // Partial Fisher–Yates for a seeded subset.
  if (spec.n < spec.grid * spec.grid) {
    for (int i = 0; i < spec.n; ++i) {
      const long j = rng.uniform(i, static_cast<long>(cells.size()) - 1);
      std::swap(cells[i], cells[j]);
    }
    cells.resize(spec.n);
  }
  std::vector<WeightedPoint> out;
  for (long c : cells) {
    out.push_back({pt(c % spec.grid, c / spec.grid), Rational(rng.uniform(1, spec.max_weight))});
  }
  return WeightedPoints(std::move(out));
}

}  // namespace

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw PreconditionError("empty uniform range");
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long>(eng_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

const char* gen_kind_name(GenKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

Family gen_family(const GenSpec& spec) {
  auto g = gen(spec);
  if (auto* f = std::get_if<Family>(&g)) return std::move(*f);
  throw PreconditionError("generator kind produces points, not a family");
}

Generated gen(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kCrossingSegments: return crossing_segments(spec);
    case GenKind::kDisjoint: return disjoint(spec);
    case GenKind::kConcentric: return concentric(spec);
    case GenKind::kSegmentsPlusBoxes: return segments_plus_boxes(spec);
    case GenKind::kRandomPolygons: return random_polygons(spec);
    case GenKind::kDiscPolygons: return disc_polygons(spec);
    case GenKind::kGridPoints: return grid_points(spec);
  }
  throw PreconditionError("unknown generator kind");
}

}  // namespace pq
