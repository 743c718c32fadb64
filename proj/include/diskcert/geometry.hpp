#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace diskcert {

// Fixed-point units per unit cell side. Cell centres and edge midpoints sit
// on multiples of 8; lattice vertices on multiples of 16.
inline constexpr std::int64_t kCellUnits = 16;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(std::int64_t k, Point p) { return {k * p.x, k * p.y}; }
};

// Twice the signed area of (o, a, b).
std::int64_t orient(Point o, Point a, Point b);

bool on_segment(Point p, Point a, Point b);

// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d);

enum class PolygonSide { inside, outside, on_boundary };

// Even-odd crossing test against the closed ring (last point joins the first).
PolygonSide locate_in_polygon(std::span<const Point> ring, Point p);

// Open polyline without self-contact: consecutive segments meet only at their
// shared vertex, non-consecutive segments are disjoint.
bool polyline_is_simple(std::span<const Point> pts);

// Closed ring variant of polyline_is_simple.
bool ring_is_simple(std::span<const Point> ring);

bool polylines_disjoint(std::span<const Point> a, std::span<const Point> b);

// Drops repeated points and interior vertices of straight runs.
std::vector<Point> merge_collinear(std::span<const Point> pts);

// Integer points strictly inside segment (a, b). The segment must be
// axis-parallel or of slope +-1.
std::vector<Point> lattice_points_inside(Point a, Point b);

}  // namespace diskcert
