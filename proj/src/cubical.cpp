#include "diskcert/cubical.hpp"

#include <algorithm>
#include <numeric>

#include "diskcert/errors.hpp"

namespace diskcert {

Edge Edge::between(Vertex a, Vertex b) {
  if (b < a) std::swap(a, b);
  if (a.y == b.y && b.x == a.x + 1) return {a.x, a.y, Axis::horizontal};
  if (a.x == b.x && b.y == a.y + 1) return {a.x, a.y, Axis::vertical};
  throw InputError("edge must join two lattice vertices one unit apart along an axis");
}

Point to_units(Vertex v) { return {kCellUnits * v.x, kCellUnits * v.y}; }

Point center_of(Cell c) {
  return {kCellUnits * c.x + kCellUnits / 2, kCellUnits * c.y + kCellUnits / 2};
}

Point BoundaryElement::representative() const {
  const Point base = to_units(Vertex{x, y});
  if (kind == ElementKind::vertex) return base;
  return axis == Axis::horizontal ? base + Point{kCellUnits / 2, 0} : base + Point{0, kCellUnits / 2};
}

std::vector<Vertex> BoundaryElement::closure() const {
  if (kind == ElementKind::vertex) return {vertex()};
  return {edge().first(), edge().second()};
}

std::string BoundaryElement::label() const {
  if (kind == ElementKind::vertex) return "V " + std::to_string(x) + " " + std::to_string(y);
  const Vertex b = edge().second();
  return "E " + std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(b.x) + " " +
         std::to_string(b.y);
}

bool CubicalSet::cell(int x, int y) const {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
  return occ_[static_cast<std::size_t>(y) * width_ + x] != 0;
}

bool CubicalSet::contains(Vertex v) const {
  if (!in_bounds(v)) return false;
  if (cell(v.x - 1, v.y - 1) || cell(v.x, v.y - 1) || cell(v.x - 1, v.y) || cell(v.x, v.y)) return true;
  if (vertex_[static_cast<std::size_t>(v.y) * (width_ + 1) + v.x]) return true;
  // Endpoint of an extra edge.
  if (v.x < width_ && hedge_[static_cast<std::size_t>(v.y) * width_ + v.x]) return true;
  if (v.x > 0 && hedge_[static_cast<std::size_t>(v.y) * width_ + v.x - 1]) return true;
  if (v.y < height_ && vedge_[static_cast<std::size_t>(v.y) * (width_ + 1) + v.x]) return true;
  if (v.y > 0 && vedge_[static_cast<std::size_t>(v.y - 1) * (width_ + 1) + v.x]) return true;
  return false;
}

bool CubicalSet::contains(Edge e) const {
  if (e.axis == Axis::horizontal) {
    if (e.x < 0 || e.x >= width_ || e.y < 0 || e.y > height_) return false;
    if (cell(e.x, e.y - 1) || cell(e.x, e.y)) return true;
    return hedge_[static_cast<std::size_t>(e.y) * width_ + e.x] != 0;
  }
  if (e.x < 0 || e.x > width_ || e.y < 0 || e.y >= height_) return false;
  if (cell(e.x - 1, e.y) || cell(e.x, e.y)) return true;
  return vedge_[static_cast<std::size_t>(e.y) * (width_ + 1) + e.x] != 0;
}

CubicalSet build_cubical_set(int width, int height, std::vector<Cell> cells, std::vector<Edge> extra_edges,
                             std::vector<Vertex> extra_vertices) {
  if (width < 1 || height < 1 || width > kMaxGridSide || height > kMaxGridSide) {
    throw InputError("grid size must be between 1 and " + std::to_string(kMaxGridSide) + " cells per side");
  }
  CubicalSet s;
  s.width_ = width;
  s.height_ = height;
  const auto w = static_cast<std::size_t>(width);
  const auto h = static_cast<std::size_t>(height);
  s.occ_.assign(w * h, 0);
  s.hedge_.assign(w * (h + 1), 0);
  s.vedge_.assign((w + 1) * h, 0);
  s.vertex_.assign((w + 1) * (h + 1), 0);

  for (const Cell& c : cells) {
    if (c.x < 0 || c.y < 0 || c.x >= width || c.y >= height) {
      throw InputError("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") outside the grid");
    }
    s.occ_[static_cast<std::size_t>(c.y) * w + c.x] = 1;
  }
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (s.cell(x, y)) s.cells_.push_back({x, y});

  for (const Edge& e : extra_edges) {
    if (!s.in_bounds(e.first()) || !s.in_bounds(e.second())) {
      throw InputError("edge " + BoundaryElement::of(e).label() + " outside the grid");
    }
  }
  for (const Vertex& v : extra_vertices) {
    if (!s.in_bounds(v)) {
      throw InputError("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) + ") outside the grid");
    }
  }

  // Edges first, so that vertices covered by an extra edge are absorbed too.
  std::sort(extra_edges.begin(), extra_edges.end());
  extra_edges.erase(std::unique(extra_edges.begin(), extra_edges.end()), extra_edges.end());
  for (const Edge& e : extra_edges) {
    if (s.contains(e)) continue;
    if (e.axis == Axis::horizontal) {
      s.hedge_[static_cast<std::size_t>(e.y) * w + e.x] = 1;
    } else {
      s.vedge_[static_cast<std::size_t>(e.y) * (w + 1) + e.x] = 1;
    }
    s.extra_edges_.push_back(e);
  }
  std::sort(extra_vertices.begin(), extra_vertices.end());
  extra_vertices.erase(std::unique(extra_vertices.begin(), extra_vertices.end()), extra_vertices.end());
  for (const Vertex& v : extra_vertices) {
    if (s.contains(v)) continue;
    s.vertex_[static_cast<std::size_t>(v.y) * (w + 1) + v.x] = 1;
    s.extra_vertices_.push_back(v);
  }
  return s;
}

CubicalSet subdivide(const CubicalSet& set) {
  std::vector<Cell> cells;
  for (const Cell& c : set.cells()) {
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) cells.push_back({2 * c.x + dx, 2 * c.y + dy});
  }
  std::vector<Edge> edges;
  for (const Edge& e : set.extra_edges()) {
    if (e.axis == Axis::horizontal) {
      edges.push_back({2 * e.x, 2 * e.y, Axis::horizontal});
      edges.push_back({2 * e.x + 1, 2 * e.y, Axis::horizontal});
    } else {
      edges.push_back({2 * e.x, 2 * e.y, Axis::vertical});
      edges.push_back({2 * e.x, 2 * e.y + 1, Axis::vertical});
    }
  }
  std::vector<Vertex> vertices;
  for (const Vertex& v : set.extra_vertices()) vertices.push_back({2 * v.x, 2 * v.y});
  return build_cubical_set(2 * set.width(), 2 * set.height(), std::move(cells), std::move(edges),
                           std::move(vertices));
}

Frame padded_frame(const CubicalSet& set) { return {-1, -1, set.width(), set.height()}; }

bool is_interior(const CubicalSet& set, Edge e) {
  if (e.axis == Axis::horizontal) return set.cell(e.x, e.y - 1) && set.cell(e.x, e.y);
  return set.cell(e.x - 1, e.y) && set.cell(e.x, e.y);
}

bool is_interior(const CubicalSet& set, Vertex v) {
  return set.cell(v.x - 1, v.y - 1) && set.cell(v.x, v.y - 1) && set.cell(v.x - 1, v.y) && set.cell(v.x, v.y);
}

bool is_boundary_element(const CubicalSet& set, const BoundaryElement& el) {
  if (el.is_vertex()) return set.contains(el.vertex()) && !is_interior(set, el.vertex());
  return set.contains(el.edge()) && !is_interior(set, el.edge());
}

std::vector<BoundaryElement> boundary_elements(const CubicalSet& set) {
  std::vector<BoundaryElement> out;
  for (int y = 0; y <= set.height(); ++y) {
    for (int x = 0; x <= set.width(); ++x) {
      const Vertex v{x, y};
      if (set.contains(v) && !is_interior(set, v)) out.push_back(BoundaryElement::of(v));
      for (Axis a : {Axis::horizontal, Axis::vertical}) {
        const Edge e{x, y, a};
        if (set.contains(e) && !is_interior(set, e)) out.push_back(BoundaryElement::of(e));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify(const CubicalSet& set) {
  Classification c;
  c.interior_cells = set.cells();
  for (int y = 0; y <= set.height(); ++y) {
    for (int x = 0; x <= set.width(); ++x) {
      if (is_interior(set, Vertex{x, y})) c.interior_vertices.push_back({x, y});
      for (Axis a : {Axis::horizontal, Axis::vertical}) {
        const Edge e{x, y, a};
        if (is_interior(set, e)) c.interior_edges.push_back(e);
      }
    }
  }
  std::sort(c.interior_edges.begin(), c.interior_edges.end());
  c.boundary_elements = boundary_elements(set);
  c.frame = padded_frame(set);
  return c;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Location of_element(bool in_d, bool interior) {
  if (!in_d) return Location::exterior;
  return interior ? Location::interior : Location::boundary;
}

}  // namespace

Location locate(const CubicalSet& set, Point p) {
  const bool on_x = p.x % kCellUnits == 0;
  const bool on_y = p.y % kCellUnits == 0;
  const int cx = static_cast<int>(floor_div(p.x, kCellUnits));
  const int cy = static_cast<int>(floor_div(p.y, kCellUnits));
  if (!on_x && !on_y) return set.cell(cx, cy) ? Location::interior : Location::exterior;
  if (on_x && on_y) {
    const Vertex v{cx, cy};
    return of_element(set.contains(v), is_interior(set, v));
  }
  const Edge e = on_y ? Edge{cx, cy, Axis::horizontal} : Edge{cx, cy, Axis::vertical};
  return of_element(set.contains(e), is_interior(set, e));
}

std::vector<Cell> incident_region_cells(const CubicalSet& set, const BoundaryElement& el, Region region) {
  std::vector<Cell> around;
  if (el.is_vertex()) {
    around = {{el.x - 1, el.y - 1}, {el.x, el.y - 1}, {el.x - 1, el.y}, {el.x, el.y}};
  } else if (el.axis == Axis::horizontal) {
    around = {{el.x, el.y - 1}, {el.x, el.y}};
  } else {
    around = {{el.x - 1, el.y}, {el.x, el.y}};
  }
  const Frame frame = padded_frame(set);
  std::vector<Cell> out;
  for (const Cell& c : around) {
    if (region == Region::interior ? set.cell(c) : (frame.contains(c) && !set.cell(c))) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool region_adjacent(const CubicalSet& set, Region region, Cell a, Cell b) {
  if (b < a) std::swap(a, b);
  Edge shared;
  if (a.y == b.y && b.x == a.x + 1) {
    shared = {b.x, b.y, Axis::vertical};
  } else if (a.x == b.x && b.y == a.y + 1) {
    shared = {b.x, b.y, Axis::horizontal};
  } else {
    return false;
  }
  if (region == Region::interior) return set.cell(a) && set.cell(b);
  const Frame frame = padded_frame(set);
  if (!frame.contains(a) || !frame.contains(b) || set.cell(a) || set.cell(b)) return false;
  return !set.contains(shared);
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Cell>> region_components(const CubicalSet& set, Region region) {
  const Frame frame = padded_frame(set);
  const int fw = frame.x1 - frame.x0 + 1;
  const int fh = frame.y1 - frame.y0 + 1;
  auto index = [&](Cell c) { return (c.y - frame.y0) * fw + (c.x - frame.x0); };
  auto member = [&](Cell c) { return region == Region::interior ? set.cell(c) : !set.cell(c); };

  DisjointSets ds(static_cast<std::size_t>(fw) * fh);
  int ring_root = -1;
  for (int y = frame.y0; y <= frame.y1; ++y) {
    for (int x = frame.x0; x <= frame.x1; ++x) {
      const Cell c{x, y};
      if (!member(c)) continue;
      if (region == Region::complement && frame.on_ring(c)) {
        if (ring_root < 0) ring_root = index(c);
        ds.unite(ring_root, index(c));
      }
      const Cell right{x + 1, y};
      const Cell down{x, y + 1};
      if (frame.contains(right) && region_adjacent(set, region, c, right)) ds.unite(index(c), index(right));
      if (frame.contains(down) && region_adjacent(set, region, c, down)) ds.unite(index(c), index(down));
    }
  }

  std::vector<int> root_slot(static_cast<std::size_t>(fw) * fh, -1);
  std::vector<std::vector<Cell>> comps;
  for (int y = frame.y0; y <= frame.y1; ++y) {
    for (int x = frame.x0; x <= frame.x1; ++x) {
      const Cell c{x, y};
      if (!member(c)) continue;
      const int r = ds.find(index(c));
      if (root_slot[r] < 0) {
        root_slot[r] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[root_slot[r]].push_back(c);
    }
  }
  for (auto& comp : comps) std::sort(comp.begin(), comp.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace diskcert
