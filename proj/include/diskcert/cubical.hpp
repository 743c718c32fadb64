#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "diskcert/geometry.hpp"

namespace diskcert {

// Largest accepted grid side, in cells.
inline constexpr int kMaxGridSide = 64;

// Unit cell [x, x+1] x [y, y+1]. Rows grow downward, as in the shape files.
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Lattice vertex (x, y).
struct Vertex {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Axis : std::uint8_t { horizontal, vertical };

// Unit lattice edge starting at (x, y): horizontal edges end at (x+1, y),
// vertical ones at (x, y+1).
struct Edge {
  int x = 0;
  int y = 0;
  Axis axis = Axis::horizontal;

  // Throws InputError unless a and b are one unit apart along an axis.
  static Edge between(Vertex a, Vertex b);
  Vertex first() const { return {x, y}; }
  Vertex second() const { return axis == Axis::horizontal ? Vertex{x + 1, y} : Vertex{x, y + 1}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ElementKind : std::uint8_t { vertex, edge };

// An atom of the boundary: a lattice vertex or an open unit edge.
struct BoundaryElement {
  ElementKind kind = ElementKind::vertex;
  int x = 0;
  int y = 0;
  Axis axis = Axis::horizontal;  // edges only

  static BoundaryElement of(Vertex v) { return {ElementKind::vertex, v.x, v.y, Axis::horizontal}; }
  static BoundaryElement of(Edge e) { return {ElementKind::edge, e.x, e.y, e.axis}; }

  bool is_vertex() const { return kind == ElementKind::vertex; }
  Vertex vertex() const { return {x, y}; }
  Edge edge() const { return {x, y, axis}; }

  // Vertex itself or edge midpoint, in fixed-point units.
  Point representative() const;
  // Closure vertices: one for a vertex, both endpoints for an edge.
  std::vector<Vertex> closure() const;
  // "V x y" or "E x1 y1 x2 y2".
  std::string label() const;

  friend bool operator==(const BoundaryElement& a, const BoundaryElement& b) {
    return a.representative() == b.representative();
  }
  friend std::strong_ordering operator<=>(const BoundaryElement& a, const BoundaryElement& b) {
    return a.representative() <=> b.representative();
  }
};

Point to_units(Vertex v);
Point center_of(Cell c);

// The compact set D: closed cells plus extra closed edges and vertices.
class CubicalSet {
 public:
  CubicalSet() = default;

  int width() const { return width_; }
  int height() const { return height_; }

  // Occupancy; false outside the grid.
  bool cell(int x, int y) const;
  bool cell(Cell c) const { return cell(c.x, c.y); }
  bool contains(Vertex v) const;
  bool contains(Edge e) const;
  bool in_bounds(Vertex v) const { return v.x >= 0 && v.y >= 0 && v.x <= width_ && v.y <= height_; }

  // Sorted, duplicate-free, with extras covered by cell closures removed.
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Edge>& extra_edges() const { return extra_edges_; }
  const std::vector<Vertex>& extra_vertices() const { return extra_vertices_; }

  friend bool operator==(const CubicalSet& a, const CubicalSet& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_ &&
           a.extra_edges_ == b.extra_edges_ && a.extra_vertices_ == b.extra_vertices_;
  }

 private:
  friend CubicalSet build_cubical_set(int, int, std::vector<Cell>, std::vector<Edge>, std::vector<Vertex>);

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> occ_;      // width x height
  std::vector<std::uint8_t> hedge_;    // width x (height+1), extras only
  std::vector<std::uint8_t> vedge_;    // (width+1) x height, extras only
  std::vector<std::uint8_t> vertex_;   // (width+1) x (height+1), extras only
  std::vector<Cell> cells_;
  std::vector<Edge> extra_edges_;
  std::vector<Vertex> extra_vertices_;
};

// Throws InputError on a bad size or an out-of-bounds coordinate.
CubicalSet build_cubical_set(int width, int height, std::vector<Cell> cells,
                             std::vector<Edge> extra_edges = {},
                             std::vector<Vertex> extra_vertices = {});

// Global 2x2 subdivision: every cell, edge and vertex is split at half units.
CubicalSet subdivide(const CubicalSet& set);

enum class Region : std::uint8_t { interior, complement };
enum class Location : std::uint8_t { interior, boundary, exterior };

// Cells [-1, width] x [-1, height]; the outer ring stands in for the
// unbounded part of the complement.
struct Frame {
  int x0 = -1;
  int y0 = -1;
  int x1 = 0;  // inclusive
  int y1 = 0;  // inclusive
  bool contains(Cell c) const { return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1; }
  bool on_ring(Cell c) const { return c.x == x0 || c.x == x1 || c.y == y0 || c.y == y1; }
};

Frame padded_frame(const CubicalSet& set);

struct Classification {
  std::vector<Cell> interior_cells;
  std::vector<Edge> interior_edges;
  std::vector<Vertex> interior_vertices;
  std::vector<BoundaryElement> boundary_elements;  // sorted
  Frame frame;
};

bool is_interior(const CubicalSet& set, Edge e);
bool is_interior(const CubicalSet& set, Vertex v);
bool is_boundary_element(const CubicalSet& set, const BoundaryElement& el);

Classification classify(const CubicalSet& set);
std::vector<BoundaryElement> boundary_elements(const CubicalSet& set);

// Position of a fixed-point location relative to D.
Location locate(const CubicalSet& set, Point p);

// Occupied cells of the grid touching el (region interior) or unoccupied
// cells of the padded frame touching el (region complement), sorted.
std::vector<Cell> incident_region_cells(const CubicalSet& set, const BoundaryElement& el, Region region);

// Two region cells sharing an edge are joined when the edge belongs to the
// region: interior edges for the interior, edges outside D for the complement.
bool region_adjacent(const CubicalSet& set, Region region, Cell a, Cell b);

// Connected components of the region's cells; the frame ring is one
// component from the start. Components and their cells are sorted.
std::vector<std::vector<Cell>> region_components(const CubicalSet& set, Region region);

}  // namespace diskcert
