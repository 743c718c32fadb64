#include "support.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

namespace diskcert::testing {

namespace {

// Doubled coordinates: cell (x, y) sits at (2x+1, 2y+1), vertex (x, y) at
// (2x, 2y), edges in between.
struct Faces {
  int w = 0;
  int h = 0;
  int margin = 2;  // doubled units, one cell
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> in_d;

  explicit Faces(const CubicalSet& set) : w(set.width()), h(set.height()) {
    nx = 2 * w + 1 + 2 * margin;
    ny = 2 * h + 1 + 2 * margin;
    in_d.assign(static_cast<std::size_t>(nx) * ny, 0);
    for (const Cell& c : set.cells()) {
      for (int dy = 0; dy <= 2; ++dy)
        for (int dx = 0; dx <= 2; ++dx) mark(2 * c.x + dx, 2 * c.y + dy);
    }
    for (const Edge& e : set.extra_edges()) {
      const Vertex a = e.first();
      const Vertex b = e.second();
      mark(2 * a.x, 2 * a.y);
      mark(a.x + b.x, a.y + b.y);
      mark(2 * b.x, 2 * b.y);
    }
    for (const Vertex& v : set.extra_vertices()) mark(2 * v.x, 2 * v.y);
  }

  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(j + margin) * nx + static_cast<std::size_t>(i + margin);
  }
  bool valid(int i, int j) const { return i >= -margin && j >= -margin && i < nx - margin && j < ny - margin; }
  void mark(int i, int j) { in_d[at(i, j)] = 1; }
  bool member(int i, int j) const { return valid(i, j) && in_d[at(i, j)] != 0; }

  // Every cell in the open star of face (i, j) is in D.
  bool interior(int i, int j) const {
    if (!member(i, j)) return false;
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        const int ci = i + di;
        const int cj = j + dj;
        if ((ci & 1) == 0 || (cj & 1) == 0) continue;
        if ((i & 1) && di != 0) continue;
        if ((j & 1) && dj != 0) continue;
        if (!member(ci, cj)) return false;
      }
    }
    return true;
  }
};

bool odd(int v) { return (v & 1) != 0; }

// g lies in the closure of f.
bool incident(int fi, int fj, int gi, int gj) {
  const int di = gi - fi;
  const int dj = gj - fj;
  if (di < -1 || di > 1 || dj < -1 || dj > 1 || (di == 0 && dj == 0)) return false;
  if (di != 0 && !odd(fi)) return false;
  if (dj != 0 && !odd(fj)) return false;
  return true;
}

}  // namespace

FaceCounts brute_classify(const CubicalSet& set) {
  const Faces f(set);
  FaceCounts out;
  for (int j = 0; j <= 2 * f.h; ++j) {
    for (int i = 0; i <= 2 * f.w; ++i) {
      if (!f.member(i, j)) continue;
      const bool inner = f.interior(i, j);
      const int dim = static_cast<int>(odd(i)) + static_cast<int>(odd(j));
      if (dim == 2) {
        out.interior_cells += inner ? 1 : 0;
      } else if (dim == 1) {
        (inner ? out.interior_edges : out.boundary_edges) += 1;
      } else {
        (inner ? out.interior_vertices : out.boundary_vertices) += 1;
      }
    }
  }
  return out;
}

int flood_components(const CubicalSet& set, bool interior) {
  const Faces f(set);
  auto in_region = [&](int i, int j) { return interior ? f.interior(i, j) : !f.member(i, j); };
  std::vector<std::uint8_t> seen(f.in_d.size(), 0);
  int components = 0;
  for (int j = -f.margin; j < f.ny - f.margin; ++j) {
    for (int i = -f.margin; i < f.nx - f.margin; ++i) {
      if (seen[f.at(i, j)] || !in_region(i, j)) continue;
      ++components;
      std::queue<std::pair<int, int>> q;
      q.emplace(i, j);
      seen[f.at(i, j)] = 1;
      while (!q.empty()) {
        const auto [ci, cj] = q.front();
        q.pop();
        for (int dj = -1; dj <= 1; ++dj) {
          for (int di = -1; di <= 1; ++di) {
            const int ni = ci + di;
            const int nj = cj + dj;
            if (!f.valid(ni, nj) || seen[f.at(ni, nj)] || !in_region(ni, nj)) continue;
            if (!incident(ci, cj, ni, nj) && !incident(ni, nj, ci, cj)) continue;
            seen[f.at(ni, nj)] = 1;
            q.emplace(ni, nj);
          }
        }
      }
    }
  }
  return components;
}

static bool on_boundary(const Faces& f, Point p) {
  auto doubled = [](std::int64_t v) {
    const std::int64_t q = v >= 0 ? v / kCellUnits : -((-v + kCellUnits - 1) / kCellUnits);
    return static_cast<int>(v % kCellUnits == 0 ? 2 * (v / kCellUnits) : 2 * q + 1);
  };
  const int i = doubled(p.x);
  const int j = doubled(p.y);
  return f.member(i, j) && !f.interior(i, j);
}

bool point_on_boundary(const CubicalSet& set, Point p) { return on_boundary(Faces(set), p); }

bool polyline_avoids_boundary_except(const CubicalSet& set, const std::vector<Point>& pts,
                                     const std::vector<Point>& allowed) {
  const Faces f(set);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point a = pts[k];
    const Point b = pts[k + 1];
    const std::int64_t dx = (b.x > a.x) - (b.x < a.x);
    const std::int64_t dy = (b.y > a.y) - (b.y < a.y);
    for (Point p = a;; p = p + Point{dx, dy}) {
      if (std::find(allowed.begin(), allowed.end(), p) == allowed.end() && on_boundary(f, p)) return false;
      if (p == b) break;
    }
  }
  return true;
}

bool reference_is_disk(const CubicalSet& set) {
  if (flood_components(set, true) != 1 || flood_components(set, false) != 1) return false;
  const Faces f(set);
  // Boundary graph: boundary vertices joined by boundary edges.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
  int boundary_vertices = 0;
  for (int j = 0; j <= 2 * f.h; ++j) {
    for (int i = 0; i <= 2 * f.w; ++i) {
      if (!f.member(i, j) || f.interior(i, j)) continue;
      if (!odd(i) && !odd(j)) {
        ++boundary_vertices;
        adj[{i, j}];
      } else if (odd(i) != odd(j)) {
        const std::pair<int, int> a = odd(i) ? std::pair{i - 1, j} : std::pair{i, j - 1};
        const std::pair<int, int> b = odd(i) ? std::pair{i + 1, j} : std::pair{i, j + 1};
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  if (boundary_vertices == 0) return false;
  for (const auto& [v, n] : adj)
    if (n.size() != 2) return false;
  // Single cycle: walking from the first vertex returns after visiting all.
  const auto start = adj.begin()->first;
  auto prev = start;
  auto cur = adj.begin()->second[0];
  int steps = 1;
  while (cur != start) {
    const auto& n = adj[cur];
    const auto next = n[0] == prev ? n[1] : n[0];
    prev = cur;
    cur = next;
    if (++steps > boundary_vertices) return false;
  }
  return steps == boundary_vertices;
}

CubicalSet from_mask(int width, int height, std::uint32_t mask) {
  std::vector<Cell> cells;
  for (int k = 0; k < width * height; ++k)
    if (mask >> k & 1u) cells.push_back({k % width, k / width});
  return build_cubical_set(width, height, std::move(cells));
}

CubicalSet random_disk(std::mt19937_64& rng, int max_side, int max_boundary) {
  std::uniform_int_distribution<int> side(1, max_side);
  for (;;) {
    const int w = side(rng);
    const int h = side(rng);
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(w) * h, 0);
    const int target = std::uniform_int_distribution<int>(1, w * h)(rng);
    std::vector<Cell> cells{{std::uniform_int_distribution<int>(0, w - 1)(rng),
                             std::uniform_int_distribution<int>(0, h - 1)(rng)}};
    occ[static_cast<std::size_t>(cells[0].y) * w + cells[0].x] = 1;
    for (int tries = 0; static_cast<int>(cells.size()) < target && tries < 40 * w * h; ++tries) {
      const Cell c = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
      static constexpr int dx[] = {1, -1, 0, 0};
      static constexpr int dy[] = {0, 0, 1, -1};
      const int d = std::uniform_int_distribution<int>(0, 3)(rng);
      const Cell n{c.x + dx[d], c.y + dy[d]};
      if (n.x < 0 || n.y < 0 || n.x >= w || n.y >= h) continue;
      auto& o = occ[static_cast<std::size_t>(n.y) * w + n.x];
      if (o) continue;
      o = 1;
      cells.push_back(n);
    }
    CubicalSet set = build_cubical_set(w, h, cells);
    if (!reference_is_disk(set)) continue;
    if (brute_classify(set).boundary() > max_boundary) continue;
    return set;
  }
}

CubicalSet random_set(std::mt19937_64& rng, int max_side) {
  std::uniform_int_distribution<int> side(1, max_side);
  const int w = side(rng);
  const int h = side(rng);
  std::bernoulli_distribution occupied(0.55);
  std::vector<Cell> cells;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (occupied(rng)) cells.push_back({x, y});
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  const int extras = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < extras; ++k) {
    const Vertex v{std::uniform_int_distribution<int>(0, w)(rng), std::uniform_int_distribution<int>(0, h)(rng)};
    if (std::bernoulli_distribution(0.5)(rng)) {
      vertices.push_back(v);
    } else if (v.x < w) {
      edges.push_back({v.x, v.y, Axis::horizontal});
    } else if (v.y < h) {
      edges.push_back({v.x, v.y, Axis::vertical});
    }
  }
  return build_cubical_set(w, h, std::move(cells), std::move(edges), std::move(vertices));
}

std::string data_path(const std::string& name) { return std::string(DISKCERT_TEST_DATA) + "/" + name; }

}  // namespace diskcert::testing
