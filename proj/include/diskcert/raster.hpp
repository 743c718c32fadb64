#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diskcert/cubical.hpp"
#include "diskcert/geometry.hpp"

namespace diskcert {

namespace layer {
inline constexpr std::uint8_t boundary = 1;
inline constexpr std::uint8_t gamma_interior = 2;
inline constexpr std::uint8_t gamma_complement = 4;
inline constexpr std::uint8_t gamma = gamma_interior | gamma_complement;
inline constexpr std::uint8_t cut = 8;
inline constexpr std::uint8_t avoid = 16;
}  // namespace layer

// Tetrakis triangulation of the padded frame at a spacing of 2 units: each
// 2x2 square is split by both diagonals into four triangles. Every curve
// used here (axis or slope +-1 segments between even points) is a union of
// grid elements, so region connectivity reduces to triangle adjacency
// across unmarked shared sides.
class TetraGrid {
 public:
  static constexpr std::int64_t kStep = 2;

  TetraGrid() = default;
  // Covers cells [-pad, width + pad - 1] x [-pad, height + pad - 1].
  TetraGrid(int width, int height, int pad);

  bool contains(Point p) const;
  std::size_t triangle_count() const { return 4 * static_cast<std::size_t>(nx_) * ny_; }

  // Corners (even, even) and square centres (odd, odd) carry layers.
  void mark_point(Point p, std::uint8_t bits);
  // a and b even, segment axis-parallel or of slope +-1.
  void mark_segment(Point a, Point b, std::uint8_t bits);
  void mark_polyline(std::span<const Point> pts, std::uint8_t bits);

  std::uint8_t point_layers(Point p) const;
  // No element of the open segment (a, b) carries a forbidden layer.
  bool segment_clear(Point a, Point b, std::uint8_t forbidden) const;

  // Cell of the cubical grid whose open square contains the triangle.
  Cell triangle_cell(std::size_t tri) const;
  // A point strictly inside the triangle, in doubled units.
  Point triangle_sample_doubled(std::size_t tri) const;
  // Triangles having corner p as a vertex.
  std::vector<std::size_t> triangles_at_corner(Point p) const;

  // Components of the included triangles (all when include is empty) joined
  // across sides free of `blocking`. Excluded triangles get label -1.
  std::vector<int> fill(std::uint8_t blocking, std::span<const std::uint8_t> include, int& count) const;

 private:
  std::size_t corner_index(std::int64_t i, std::int64_t j) const;
  std::size_t center_index(std::int64_t i, std::int64_t j) const;
  std::size_t hedge_index(std::int64_t i, std::int64_t j) const;
  std::size_t vedge_index(std::int64_t i, std::int64_t j) const;
  std::size_t diag_index(std::int64_t i, std::int64_t j, int k) const;
  // Elements of segment (a, b) excluding its endpoints.
  template <typename F>
  void walk_open_segment(Point a, Point b, F&& visit) const;

  int pad_ = 0;
  std::int64_t ox_ = 0;
  std::int64_t oy_ = 0;
  std::int64_t nx_ = 0;
  std::int64_t ny_ = 0;
  std::size_t off_center_ = 0;
  std::size_t off_h_ = 0;
  std::size_t off_v_ = 0;
  std::size_t off_d_ = 0;
  std::vector<std::uint8_t> layers_;
};

}  // namespace diskcert
