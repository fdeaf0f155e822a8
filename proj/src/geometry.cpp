#include "pq/geometry.hpp"

#include <algorithm>

#include "pq/errors.hpp"

namespace pq {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point2& o, const Point2& a, const Point2& b) {
  return cross(o, a, b).sign();
}

namespace {

// p on closed segment [a,b], given a, b, p collinear.
bool between(const Point2& a, const Point2& b, const Point2& p) {
  const auto& lo = std::min(a, b);
  const auto& hi = std::max(a, b);
  return lo <= p && p <= hi;
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return orientation(a, b, p) == 0 && between(a, b, p);
}

}  // namespace

std::vector<Point2> segment_intersection(const Point2& a, const Point2& b, const Point2& c,
                                         const Point2& d) {
  if (a == b) {
    if (on_segment(c, d, a)) return {a};
    return {};
  }
  if (c == d) {
    if (on_segment(a, b, c)) return {c};
    return {};
  }
  const int d1 = orientation(c, d, a);
  const int d2 = orientation(c, d, b);
  const int d3 = orientation(a, b, c);
  const int d4 = orientation(a, b, d);
  if (d1 == 0 && d2 == 0) {
    // Collinear: lexicographic order is monotone along the line.
    const Point2 lo = std::max(std::min(a, b), std::min(c, d));
    const Point2 hi = std::min(std::max(a, b), std::max(c, d));
    if (hi < lo) return {};
    if (lo == hi) return {lo};
    return {lo, hi};
  }
  if (d1 * d2 > 0 || d3 * d4 > 0) return {};
  // Proper crossing or touching at an endpoint.
  if (d1 == 0) return {a};
  if (d2 == 0) return {b};
  if (d3 == 0) return {c};
  if (d4 == 0) return {d};
  const Point2 r{b.x - a.x, b.y - a.y};
  const Point2 s{d.x - c.x, d.y - c.y};
  const Rational denom = r.x * s.y - r.y * s.x;
  const Rational t = ((c.x - a.x) * s.y - (c.y - a.y) * s.x) / denom;
  return {Point2{a.x + t * r.x, a.y + t * r.y}};
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // All collinear: the chain collapses to the two extremes.
  if (hull.size() == 2 || hull.empty()) return {pts.front(), pts.back()};
  return hull;
}

ConvexBody::ConvexBody(std::span<const Point2> points, int id) : id_(id) {
  if (points.empty()) throw PreconditionError("convex body needs at least one point");
  vertices_ = convex_hull(std::vector<Point2>(points.begin(), points.end()));
}

ConvexBody ConvexBody::with_id(int id) const {
  ConvexBody b = *this;
  b.id_ = id;
  return b;
}

ConvexBody::Kind ConvexBody::kind() const {
  switch (vertices_.size()) {
    case 1: return Kind::kPoint;
    case 2: return Kind::kSegment;
    default: return Kind::kPolygon;
  }
}

bool ConvexBody::contains(const Point2& p) const {
  const auto& v = vertices_;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) return on_segment(v[0], v[1], p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orientation(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  }
  return true;
}

bool ConvexBody::contains_in_interior(const Point2& p) const {
  const auto& v = vertices_;
  if (v.size() < 3) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orientation(v[i], v[(i + 1) % v.size()], p) <= 0) return false;
  }
  return true;
}

std::vector<std::pair<Point2, Point2>> ConvexBody::boundary_pieces() const {
  const auto& v = vertices_;
  if (v.size() == 1) return {{v[0], v[0]}};
  if (v.size() == 2) return {{v[0], v[1]}};
  std::vector<std::pair<Point2, Point2>> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(v[i], v[(i + 1) % v.size()]);
  return out;
}

std::vector<Point2> boundary_intersections(const ConvexBody& a, const ConvexBody& b) {
  std::vector<Point2> out;
  for (const auto& [p0, p1] : a.boundary_pieces()) {
    for (const auto& [q0, q1] : b.boundary_pieces()) {
      for (auto& x : segment_intersection(p0, p1, q0, q1)) out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ConvexBody> intersect(const ConvexBody& a, const ConvexBody& b) {
  // Every vertex of a ∩ b is a vertex of one body inside the other, or a
  // crossing of their boundaries; all such points lie in a ∩ b.
  std::vector<Point2> pts;
  for (const auto& v : a.vertices()) {
    if (b.contains(v)) pts.push_back(v);
  }
  for (const auto& v : b.vertices()) {
    if (a.contains(v)) pts.push_back(v);
  }
  auto crossings = boundary_intersections(a, b);
  pts.insert(pts.end(), crossings.begin(), crossings.end());
  if (pts.empty()) return std::nullopt;
  return ConvexBody(pts, a.id());
}

std::optional<Point2> common_point(std::span<const ConvexBody> bodies) {
  if (bodies.empty()) throw PreconditionError("common_point of an empty list");
  std::optional<ConvexBody> acc = bodies.front();
  for (std::size_t i = 1; i < bodies.size() && acc; ++i) acc = intersect(*acc, bodies[i]);
  if (!acc) return std::nullopt;
  return acc->vertices().front();
}

std::vector<Point2> candidate_points(std::span<const ConvexBody> bodies) {
  std::vector<Point2> out;
  for (const auto& b : bodies) out.insert(out.end(), b.vertices().begin(), b.vertices().end());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      auto x = boundary_intersections(bodies[i], bodies[j]);
      out.insert(out.end(), x.begin(), x.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Point2 centroid(std::span<const Point2> points) {
  if (points.empty()) throw PreconditionError("centroid of no points");
  Rational sx, sy;
  for (const auto& p : points) {
    sx += p.x;
    sy += p.y;
  }
  const Rational n(static_cast<long>(points.size()));
  return {sx / n, sy / n};
}

}  // namespace pq
