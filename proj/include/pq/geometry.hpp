#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pq/rational.hpp"

namespace pq {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
Rational cross(const Point2& o, const Point2& a, const Point2& b);
int orientation(const Point2& o, const Point2& a, const Point2& b);

/// Points where the closed segments [a,b] and [c,d] meet: none, one, or the two
/// endpoints of a collinear overlap. Degenerate segments (a == b) are allowed.
std::vector<Point2> segment_intersection(const Point2& a, const Point2& b, const Point2& c,
                                         const Point2& d);

/// Closed, compact convex polygon in the plane with exact vertices.
///
/// Vertices are stored counterclockwise starting at the lexicographically
/// smallest one, with collinear vertices removed. One vertex is a point, two a
/// segment, three or more a polygon with nonempty interior.
class ConvexBody {
 public:
  enum class Kind { kPoint, kSegment, kPolygon };

  /// Convex hull of `points`. Throws PreconditionError on an empty list.
  explicit ConvexBody(std::span<const Point2> points, int id = 0);
  ConvexBody(std::initializer_list<Point2> points, int id = 0)
      : ConvexBody(std::span<const Point2>(points.begin(), points.size()), id) {}

  int id() const { return id_; }
  ConvexBody with_id(int id) const;

  const std::vector<Point2>& vertices() const { return vertices_; }
  Kind kind() const;

  bool contains(const Point2& p) const;
  /// Planar interior. Empty for points and segments.
  bool contains_in_interior(const Point2& p) const;
  bool on_boundary(const Point2& p) const { return contains(p) && !contains_in_interior(p); }

  /// Boundary pieces as closed segments. A point body yields one degenerate
  /// piece, a segment body yields itself.
  std::vector<std::pair<Point2, Point2>> boundary_pieces() const;

  /// Same vertex cycle; ids are ignored.
  bool same_shape(const ConvexBody& o) const { return vertices_ == o.vertices_; }

 private:
  ConvexBody() = default;
  std::vector<Point2> vertices_;
  int id_ = 0;
};

/// Convex hull, counterclockwise from the lexicographic minimum, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// Exact intersection of two bodies, or nothing when they are disjoint.
/// The result carries `a`'s id.
std::optional<ConvexBody> intersect(const ConvexBody& a, const ConvexBody& b);

/// Lexicographically smallest point of the common intersection, if nonempty.
/// Throws PreconditionError on an empty list.
std::optional<Point2> common_point(std::span<const ConvexBody> bodies);

/// Points where the boundaries of `a` and `b` meet (arrangement vertices).
std::vector<Point2> boundary_intersections(const ConvexBody& a, const ConvexBody& b);

/// Every vertex of every body plus every pairwise boundary crossing, sorted
/// and deduplicated. Each nonempty common intersection of a subfamily contains
/// at least one of them.
std::vector<Point2> candidate_points(std::span<const ConvexBody> bodies);

Point2 centroid(std::span<const Point2> points);

}  // namespace pq
