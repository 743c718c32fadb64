#include "diskcert/arcs.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "diskcert/criterion.hpp"
#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

constexpr std::array<Cell, 4> kCellSteps = {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

Point half_way(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

}  // namespace

Arc region_arc(const CubicalSet& set, Region region, const BoundaryElement& x1, const BoundaryElement& x2) {
  if (x1 == x2) throw ContractViolation("region_arc: endpoints coincide");
  if (!is_boundary_element(set, x1) || !is_boundary_element(set, x2)) {
    throw ContractViolation("region_arc: endpoint is not a boundary element");
  }
  const std::vector<Cell> sources = incident_region_cells(set, x1, region);
  const std::vector<Cell> targets = incident_region_cells(set, x2, region);
  if (sources.empty() || targets.empty()) throw ContractViolation("region_arc: endpoint not accessible");

  const Frame frame = padded_frame(set);
  const int fw = frame.x1 - frame.x0 + 1;
  const int fh = frame.y1 - frame.y0 + 1;
  auto index = [&](Cell c) { return (c.y - frame.y0) * fw + (c.x - frame.x0); };
  std::vector<int> parent(static_cast<std::size_t>(fw) * fh, -2);  // -2 unseen, -1 source
  std::vector<Cell> cell_at(parent.size());
  std::deque<Cell> queue;
  for (const Cell& c : sources) {
    parent[index(c)] = -1;
    cell_at[index(c)] = c;
    queue.push_back(c);
  }
  std::optional<Cell> hit;
  while (!queue.empty() && !hit) {
    const Cell c = queue.front();
    queue.pop_front();
    if (std::binary_search(targets.begin(), targets.end(), c)) {
      hit = c;
      break;
    }
    for (const Cell& d : kCellSteps) {
      const Cell n{c.x + d.x, c.y + d.y};
      if (!frame.contains(n) || parent[index(n)] != -2) continue;
      if (!region_adjacent(set, region, c, n)) continue;
      parent[index(n)] = index(c);
      cell_at[index(n)] = n;
      queue.push_back(n);
    }
  }
  if (!hit) throw NoArcError("region_arc: " + x1.label() + " and " + x2.label() + " lie in different components");

  std::vector<Cell> path;
  for (int at = index(*hit); at >= 0; at = parent[at]) path.push_back(cell_at[at]);
  std::reverse(path.begin(), path.end());

  Arc arc;
  arc.region = region == Region::interior ? ArcRegion::interior : ArcRegion::complement;
  arc.start = x1;
  arc.end = x2;
  arc.vertices.push_back(x1.representative());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) arc.vertices.push_back(half_way(center_of(path[i - 1]), center_of(path[i])));
    arc.vertices.push_back(center_of(path[i]));
  }
  arc.vertices.push_back(x2.representative());
  return arc;
}

std::pair<BoundaryElement, BoundaryElement> choose_endpoints(const CubicalSet& set) {
  std::vector<BoundaryElement> verts;
  for (const BoundaryElement& el : boundary_elements(set))
    if (el.is_vertex()) verts.push_back(el);
  if (verts.size() < 2) throw ContractViolation("choose_endpoints: fewer than two boundary vertices");
  std::int64_t best = -1;
  std::pair<BoundaryElement, BoundaryElement> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Point d = verts[i].representative() - verts[j].representative();
      const std::int64_t d2 = d.x * d.x + d.y * d.y;
      if (d2 > best) {
        best = d2;
        out = {verts[i], verts[j]};
      }
    }
  }
  return out;
}

JordanSplit jordan_split(const CubicalSet& set, const BoundaryElement& z1, const BoundaryElement& z2) {
  if (evaluate(set).verdict != Verdict::disk) throw ContractViolation("jordan_split: set is not a disk");
  if (z1 == z2) throw ContractViolation("jordan_split: z1 == z2");

  JordanSplit split;
  split.z1 = z1;
  split.z2 = z2;
  split.gamma_interior = region_arc(set, Region::interior, z1, z2);
  split.gamma_complement = region_arc(set, Region::complement, z1, z2);
  split.gamma = split.gamma_interior.vertices;
  const auto& back = split.gamma_complement.vertices;
  for (std::size_t i = back.size() - 2; i >= 1; --i) split.gamma.push_back(back[i]);
  if (!ring_is_simple(split.gamma)) throw InvariantViolation("jordan_split: gamma is not a simple closed curve");

  auto geo = std::make_shared<SplitGeometry>();
  geo->set = set;
  geo->grid = TetraGrid(set.width(), set.height(), 3);
  for (const BoundaryElement& el : boundary_elements(set)) {
    if (el.is_vertex()) {
      geo->grid.mark_point(el.representative(), layer::boundary);
    } else {
      geo->grid.mark_segment(to_units(el.edge().first()), to_units(el.edge().second()), layer::boundary);
    }
  }
  geo->grid.mark_polyline(split.gamma_interior.vertices, layer::gamma_interior);
  geo->grid.mark_polyline(split.gamma_complement.vertices, layer::gamma_complement);

  int count = 0;
  const std::vector<int> sides = geo->grid.fill(layer::gamma, {}, count);
  if (count != 2) throw InvariantViolation("jordan_split: gamma does not separate the frame into two parts");
  const int outside_label = sides[0];  // corner of the padded frame
  geo->inside.resize(sides.size());
  for (std::size_t t = 0; t < sides.size(); ++t) geo->inside[t] = sides[t] != outside_label;

  for (const BoundaryElement& el : boundary_elements(set)) {
    if (el == z1 || el == z2) {
      split.k1.push_back(el);
      split.k2.push_back(el);
      continue;
    }
    const PolygonSide side = split.classify(el.representative());
    if (side == PolygonSide::on_boundary) throw InvariantViolation("jordan_split: gamma meets " + el.label());
    const bool in = side == PolygonSide::inside;
    for (std::size_t t : geo->grid.triangles_at_corner(el.representative())) {
      if ((geo->inside[t] != 0) != in) throw InvariantViolation("jordan_split: parity and fill disagree");
    }
    (in ? split.k1 : split.k2).push_back(el);
  }

  const std::vector<int> pieces = geo->grid.fill(layer::boundary | layer::gamma, {}, count);
  std::array<std::vector<int>, 4> seen;
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    const bool occupied = set.cell(geo->grid.triangle_cell(t));
    const int slot = (geo->inside[t] ? 0 : 2) + (occupied ? 0 : 1);
    seen[slot].push_back(pieces[t]);
  }
  for (auto& s : seen) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  split.pieces = {static_cast<int>(seen[0].size()), static_cast<int>(seen[1].size()),
                  static_cast<int>(seen[2].size()), static_cast<int>(seen[3].size())};
  split.geometry = std::move(geo);
  return split;
}

namespace {

constexpr std::array<Point, 8> kMoves = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

struct RouteBox {
  std::int64_t lo_x, lo_y, hi_x, hi_y;
};

// BFS on the lattice start + step * Z^2 from start (on the boundary) to the
// first node lying on `target` and on no other blocked layer. The first move
// is diagonal from a vertex and axis-parallel from an edge midpoint.
std::optional<std::vector<Point>> route_leg(const CubicalSet& set, const TetraGrid& grid, Point start,
                                            bool from_vertex, std::int64_t step, bool diagonal, Location wanted,
                                            std::uint8_t target, std::uint8_t blocked, const RouteBox& box) {
  const std::int64_t amin = -((start.x - box.lo_x) / step);
  const std::int64_t amax = (box.hi_x - start.x) / step;
  const std::int64_t bmin = -((start.y - box.lo_y) / step);
  const std::int64_t bmax = (box.hi_y - start.y) / step;
  const std::int64_t w = amax - amin + 1;
  const std::int64_t h = bmax - bmin + 1;
  auto index = [&](std::int64_t a, std::int64_t b) { return static_cast<std::size_t>((b - bmin) * w + (a - amin)); };
  std::vector<std::int64_t> parent(static_cast<std::size_t>(w * h), -2);
  std::deque<std::pair<std::int64_t, std::int64_t>> queue;
  parent[index(0, 0)] = -1;
  queue.push_back({0, 0});

  auto point_of = [&](std::int64_t a, std::int64_t b) { return Point{start.x + step * a, start.y + step * b}; };
  auto rebuild = [&](std::size_t last, Point end) {
    std::vector<Point> pts{end};
    for (auto at = static_cast<std::int64_t>(last); at >= 0; at = parent[at]) {
      const std::int64_t a = at % w + amin;
      const std::int64_t b = at / w + bmin;
      pts.push_back(point_of(a, b));
    }
    std::reverse(pts.begin(), pts.end());
    return pts;
  };

  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    const Point p = point_of(a, b);
    const bool at_start = a == 0 && b == 0;
    for (const Point& d : kMoves) {
      const bool diag = d.x != 0 && d.y != 0;
      if (at_start ? diag != from_vertex : diag && !diagonal) continue;
      const std::int64_t na = a + d.x;
      const std::int64_t nb = b + d.y;
      if (na < amin || na > amax || nb < bmin || nb > bmax) continue;
      if (parent[index(na, nb)] != -2) continue;
      const Point q = point_of(na, nb);
      if (at_start && locate(set, half_way(p, q)) != wanted) continue;
      if (!grid.segment_clear(p, q, blocked)) continue;
      const std::uint8_t on = grid.point_layers(q);
      if (on & blocked) {
        if ((on & target) && !(on & blocked & ~target)) return rebuild(index(a, b), q);
        continue;
      }
      parent[index(na, nb)] = static_cast<std::int64_t>(index(a, b));
      queue.push_back({na, nb});
    }
  }
  return std::nullopt;
}

}  // namespace

Arc crosscut(const JordanSplit& split, ArcSide side, const BoundaryElement& x, const Arc* avoid) {
  if (x == split.z1 || x == split.z2) throw ContractViolation("crosscut: x is an endpoint of the arc");
  const auto& members = split.arc(side);
  if (!std::binary_search(members.begin(), members.end(), x)) {
    throw ContractViolation("crosscut: " + x.label() + " is not on the requested arc");
  }
  const CubicalSet& set = split.set();
  const TetraGrid* grid = &split.geometry->grid;
  TetraGrid local;
  std::uint8_t blocked = layer::boundary | layer::gamma;
  if (avoid != nullptr) {
    local = *grid;
    local.mark_polyline(avoid->vertices, layer::avoid);
    grid = &local;
    blocked |= layer::avoid;
  }
  const RouteBox box{-2 * kCellUnits, -2 * kCellUnits, kCellUnits * (set.width() + 2),
                     kCellUnits * (set.height() + 2)};
  const Point start = x.representative();

  for (std::int64_t step : {8, 4, 2}) {
    for (bool diagonal : {true, false}) {
      auto into_d = route_leg(set, *grid, start, x.is_vertex(), step, diagonal, Location::interior,
                              layer::gamma_interior, blocked, box);
      if (!into_d) continue;
      auto into_c = route_leg(set, *grid, start, x.is_vertex(), step, diagonal, Location::exterior,
                              layer::gamma_complement, blocked, box);
      if (!into_c) continue;
      std::reverse(into_d->begin(), into_d->end());
      Arc arc;
      arc.region = ArcRegion::mixed;
      arc.through = x;
      arc.vertices = merge_collinear(*into_d);
      const std::vector<Point> second = merge_collinear(*into_c);
      arc.vertices.insert(arc.vertices.end(), second.begin() + 1, second.end());
      if (!arc_is_injective(arc) || !touches_boundary_only_at(set, arc, x)) continue;
      if (avoid != nullptr && !polylines_disjoint(arc.vertices, avoid->vertices)) continue;
      return arc;
    }
  }
  throw InvariantViolation("crosscut: no admissible route through " + x.label());
}

bool arc_is_injective(const Arc& arc) { return polyline_is_simple(arc.vertices); }

bool arc_in_region(const CubicalSet& set, const Arc& arc) {
  if (arc.region == ArcRegion::mixed) throw ContractViolation("arc_in_region: arc has no single region");
  const Location want = arc.region == ArcRegion::interior ? Location::interior : Location::exterior;
  const auto& v = arc.vertices;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (locate(set, v[i]) != want) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Point d = v[i + 1] - v[i];
    if (d.x % 4 != 0 || d.y % 4 != 0) throw ContractViolation("arc_in_region: segment off the sampling lattice");
    for (std::int64_t k = 1; k <= 3; ++k) {
      if (locate(set, v[i] + Point{k * d.x / 4, k * d.y / 4}) != want) return false;
    }
  }
  return true;
}

namespace {

// Closed segments s and t meet in nothing or in p alone.
bool meets_only_at(Point s0, Point s1, Point t0, Point t1, Point p) {
  if (!segments_intersect(s0, s1, t0, t1)) return true;
  if (orient(s0, s1, t0) == 0 && orient(s0, s1, t1) == 0) {
    // Collinear overlap: project on the dominant axis.
    const bool use_x = s0.x != s1.x || t0.x != t1.x;
    auto key = [&](Point q) { return use_x ? q.x : q.y; };
    const std::int64_t lo = std::max(std::min(key(s0), key(s1)), std::min(key(t0), key(t1)));
    const std::int64_t hi = std::min(std::max(key(s0), key(s1)), std::max(key(t0), key(t1)));
    if (lo < hi) return false;
  }
  return on_segment(p, s0, s1) && on_segment(p, t0, t1);
}

}  // namespace

bool touches_boundary_only_at(const CubicalSet& set, const Arc& arc, const BoundaryElement& x) {
  const Point p = x.representative();
  const auto& v = arc.vertices;
  bool touches = false;
  for (const BoundaryElement& el : boundary_elements(set)) {
    if (el.is_vertex()) {
      const Point q = el.representative();
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (on_segment(q, v[i], v[i + 1])) {
          if (q != p) return false;
          touches = true;
        }
      }
      continue;
    }
    const Point a = to_units(el.edge().first());
    const Point b = to_units(el.edge().second());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (!meets_only_at(a, b, v[i], v[i + 1], p)) return false;
      if (segments_intersect(a, b, v[i], v[i + 1])) touches = true;
    }
  }
  return touches;
}

}  // namespace diskcert
