#pragma once

#include <vector>

#include "pq/family.hpp"
#include "pq/instances.hpp"

namespace pqtest {

using pq::ConvexBody;
using pq::Family;
using pq::Point2;
using pq::Rational;

inline Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }

inline ConvexBody box(long x0, long y0, long x1, long y1, int id = 0) {
  return ConvexBody({P(x0, y0), P(x1, y0), P(x1, y1), P(x0, y1)}, id);
}

inline ConvexBody seg(long x0, long y0, long x1, long y1, int id = 0) {
  return ConvexBody({P(x0, y0), P(x1, y1)}, id);
}

inline Family concentric(int k) {
  std::vector<ConvexBody> b;
  for (int i = 0; i < k; ++i) b.push_back(box(-1 - i, -1 - i, 1 + i, 1 + i, i));
  return Family(std::move(b));
}

inline Family disjoint_boxes(int n) {
  std::vector<ConvexBody> b;
  for (int i = 0; i < n; ++i) b.push_back(box(3L * i, 0, 3L * i + 1, 1, i));
  return Family(std::move(b));
}

// Sides of the triangle (0,0), (4,0), (0,4): pairwise meeting at corners only.
inline Family triangle_sides() {
  return Family({seg(0, 0, 4, 0, 0), seg(4, 0, 0, 4, 1), seg(0, 4, 0, 0, 2)});
}

// Edges of a convex pentagon: consecutive edges share a corner, others are disjoint.
inline Family pentagon_cycle() {
  const Point2 v[] = {P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 3)};
  std::vector<ConvexBody> b;
  for (int i = 0; i < 5; ++i) b.push_back(ConvexBody({v[i], v[(i + 1) % 5]}, i));
  return Family(std::move(b));
}

inline Family crossing_segments(int n, std::uint64_t seed = 1, bool strips = false) {
  pq::GenSpec s;
  s.kind = pq::GenKind::kCrossingSegments;
  s.n = n;
  s.seed = seed;
  s.strips = strips;
  return pq::gen_family(s);
}

inline Family random_family(int n, std::uint64_t seed, int grid = 8, int radius = 4,
                            int vertices = 4) {
  pq::GenSpec s;
  s.kind = pq::GenKind::kRandomPolygons;
  s.n = n;
  s.grid = grid;
  s.radius = radius;
  s.vertices = vertices;
  s.seed = seed;
  return pq::gen_family(s);
}

// Brute-force k-subsets of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<ConvexBody> pick(const Family& f, const std::vector<std::size_t>& idx) {
  std::vector<ConvexBody> out;
  for (auto i : idx) out.push_back(f[i]);
  return out;
}

}  // namespace pqtest
