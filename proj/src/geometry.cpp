#include "diskcert/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::int64_t orient(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point p, Point a, Point b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int d1 = sign(orient(c, d, a));
  const int d2 = sign(orient(c, d, b));
  const int d3 = sign(orient(a, b, c));
  const int d4 = sign(orient(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

PolygonSide locate_in_polygon(std::span<const Point> ring, Point p) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[j];
    const Point b = ring[i];
    if (on_segment(p, a, b)) return PolygonSide::on_boundary;
    // Half-open rule on y keeps vertex crossings exact.
    if ((a.y > p.y) != (b.y > p.y)) {
      // x-coordinate of the crossing compared without division.
      const std::int64_t lhs = (p.x - a.x) * (b.y - a.y);
      const std::int64_t rhs = (b.x - a.x) * (p.y - a.y);
      const bool crosses = (b.y > a.y) ? lhs < rhs : lhs > rhs;
      if (crosses) inside = !inside;
    }
  }
  return inside ? PolygonSide::inside : PolygonSide::outside;
}

namespace {

// Consecutive segments [a,b] and [b,c] meet only in b.
bool adjacent_ok(Point a, Point b, Point c) {
  if (orient(a, b, c) != 0) return true;
  // Collinear: fine only when c continues past b away from a.
  const Point u = b - a;
  const Point v = c - b;
  return u.x * v.x + u.y * v.y > 0;
}

}  // namespace

bool polyline_is_simple(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 2) return true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (pts[i] == pts[i + 1]) return false;
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (!adjacent_ok(pts[i], pts[i + 1], pts[i + 2])) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1])) return false;
    }
  }
  return true;
}

bool ring_is_simple(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[(i + 1) % n]) return false;
    if (!adjacent_ok(ring[i], ring[(i + 1) % n], ring[(i + 2) % n])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (segments_intersect(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n])) return false;
    }
  }
  return true;
}

bool polylines_disjoint(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a : b;
    const auto& other = a.size() == 1 ? b : a;
    if (other.size() == 1) return single[0] != other[0];
    for (std::size_t j = 0; j + 1 < other.size(); ++j) {
      if (on_segment(single[0], other[j], other[j + 1])) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (segments_intersect(a[i], a[i + 1], b[j], b[j + 1])) return false;
    }
  }
  return true;
}

std::vector<Point> merge_collinear(std::span<const Point> pts) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const Point a = out[out.size() - 2];
      const Point b = out.back();
      const Point u = b - a;
      const Point v = p - b;
      if (orient(a, b, p) == 0 && u.x * v.x + u.y * v.y > 0) {
        out.back() = p;
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Point> lattice_points_inside(Point a, Point b) {
  const std::int64_t dx = b.x - a.x;
  const std::int64_t dy = b.y - a.y;
  if (dx != 0 && dy != 0 && std::llabs(dx) != std::llabs(dy)) {
    throw ContractViolation("lattice_points_inside: segment is neither axis-parallel nor diagonal");
  }
  const std::int64_t steps = std::max(std::llabs(dx), std::llabs(dy));
  const Point dir{sign(dx), sign(dy)};
  std::vector<Point> out;
  for (std::int64_t k = 1; k < steps; ++k) out.push_back(a + k * dir);
  return out;
}

}  // namespace diskcert
