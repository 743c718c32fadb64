#include "diskcert/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "diskcert/errors.hpp"
#include "diskcert/shape_io.hpp"

namespace diskcert {

namespace {

using VKey = std::pair<int, int>;             // (x, y)
using EKey = std::tuple<int, int, int>;       // (x, y, 0 horizontal | 1 vertical)

EKey key_of(const Edge& e) { return {e.x, e.y, e.axis == Axis::horizontal ? 0 : 1}; }

std::pair<VKey, VKey> ends_of(const EKey& e) {
  const auto [x, y, d] = e;
  return {{x, y}, d == 0 ? VKey{x + 1, y} : VKey{x, y + 1}};
}

// Explicit face lists of the complex, built from the raw cell and extra lists.
struct Complex {
  std::set<VKey> cells;
  std::set<EKey> edges;
  std::set<VKey> vertices;

  explicit Complex(const CubicalSet& s) {
    for (const Cell& c : s.cells()) {
      cells.insert({c.x, c.y});
      edges.insert({c.x, c.y, 0});
      edges.insert({c.x, c.y + 1, 0});
      edges.insert({c.x, c.y, 1});
      edges.insert({c.x + 1, c.y, 1});
    }
    for (const Edge& e : s.extra_edges()) edges.insert(key_of(e));
    for (const EKey& e : edges) {
      const auto [a, b] = ends_of(e);
      vertices.insert(a);
      vertices.insert(b);
    }
    for (const Vertex& v : s.extra_vertices()) vertices.insert({v.x, v.y});
  }

  bool has_cell(int x, int y) const { return cells.count({x, y}) != 0; }

  int cells_on_edge(const EKey& e) const {
    const auto [x, y, d] = e;
    return d == 0 ? has_cell(x, y - 1) + has_cell(x, y) : has_cell(x - 1, y) + has_cell(x, y);
  }

  // Incident cells in cyclic order around the vertex.
  std::array<bool, 4> ring_at(const VKey& v) const {
    const auto [x, y] = v;
    return {has_cell(x - 1, y - 1), has_cell(x, y - 1), has_cell(x, y), has_cell(x - 1, y)};
  }
};

struct UnionFind {
  std::map<VKey, VKey> parent;
  VKey find(VKey v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent.emplace(v, v);
      return v;
    }
    if (it->second == v) return v;
    const VKey r = find(it->second);
    parent[v] = r;
    return r;
  }
  void join(VKey a, VKey b) {
    const VKey ra = find(a);
    const VKey rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

int runs(const std::array<bool, 4>& ring) {
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (ring[i] && !ring[(i + 3) % 4]) ++n;
  return n;
}

BoundaryElement element_of(const EKey& e) {
  const auto [x, y, d] = e;
  return BoundaryElement::of(Edge{x, y, d == 0 ? Axis::horizontal : Axis::vertical});
}

std::vector<BoundaryElement> walk_cycle(const Complex& cx) {
  std::set<VKey> bverts;
  std::map<VKey, std::vector<EKey>> incident;
  std::size_t bedges = 0;
  for (const EKey& e : cx.edges) {
    if (cx.cells_on_edge(e) == 2) continue;
    ++bedges;
    const auto [a, b] = ends_of(e);
    incident[a].push_back(e);
    incident[b].push_back(e);
  }
  for (const VKey& v : cx.vertices) {
    const auto ring = cx.ring_at(v);
    if (!(ring[0] && ring[1] && ring[2] && ring[3])) bverts.insert(v);
  }
  if (bverts.empty()) throw NoCycleError("boundary is empty");
  for (const VKey& v : bverts) {
    if (incident[v].size() != 2) throw NoCycleError("boundary branches or ends at a vertex");
  }
  // Least vertex by representative point, i.e. by (x, y).
  const VKey start = *bverts.begin();
  auto edge_less = [](const EKey& a, const EKey& b) { return element_of(a) < element_of(b); };
  EKey edge = std::min(incident[start][0], incident[start][1], edge_less);

  std::vector<BoundaryElement> cycle;
  VKey v = start;
  do {
    cycle.push_back(BoundaryElement::of(Vertex{v.first, v.second}));
    cycle.push_back(element_of(edge));
    const auto [a, b] = ends_of(edge);
    v = (a == v) ? b : a;
    const auto& inc = incident[v];
    edge = inc[0] == edge ? inc[1] : inc[0];
  } while (v != start);
  if (cycle.size() != bverts.size() + bedges) throw NoCycleError("boundary has more than one component");
  return cycle;
}

}  // namespace

std::vector<BoundaryElement> boundary_cycle(const CubicalSet& set) { return walk_cycle(Complex(set)); }

OracleReport is_disk_oracle(const CubicalSet& set) {
  const Complex cx(set);
  OracleReport r;
  r.faces = static_cast<int>(cx.cells.size());
  r.edges = static_cast<int>(cx.edges.size());
  r.vertices = static_cast<int>(cx.vertices.size());
  r.euler_characteristic = r.vertices - r.edges + r.faces;

  UnionFind uf;
  for (const VKey& v : cx.vertices) uf.find(v);
  for (const EKey& e : cx.edges) {
    const auto [a, b] = ends_of(e);
    uf.join(a, b);
  }
  std::set<VKey> roots;
  for (const VKey& v : cx.vertices) roots.insert(uf.find(v));
  r.connected = roots.size() == 1;

  bool manifold = r.faces > 0;
  for (const EKey& e : cx.edges) {
    if (cx.cells_on_edge(e) == 0) manifold = false;  // dangling edge
  }
  for (const VKey& v : cx.vertices) {
    const auto ring = cx.ring_at(v);
    const int k = ring[0] + ring[1] + ring[2] + ring[3];
    if (k == 0) manifold = false;                // stray vertex
    if (k > 0 && k < 4 && runs(ring) != 1) manifold = false;  // pinched
    if (k < 4) r.boundary_nonempty = true;
  }
  for (const EKey& e : cx.edges)
    if (cx.cells_on_edge(e) < 2) r.boundary_nonempty = true;
  r.manifold_with_boundary = manifold;

  if (manifold) {
    try {
      r.boundary_cycle = walk_cycle(cx);
    } catch (const NoCycleError&) {
      r.boundary_cycle.reset();
    }
  }
  r.is_disk = r.connected && r.manifold_with_boundary && r.euler_characteristic == 1 && r.boundary_nonempty;
  return r;
}

std::vector<CubicalSet> extras_suite() {
  constexpr int kSide = 5;
  const std::vector<std::vector<Cell>> bases = {
      {{2, 2}},
      {{1, 2}, {2, 2}},
      {{1, 1}, {2, 1}, {1, 2}, {2, 2}},
      {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}},
      {{1, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}},
      {{1, 1}, {2, 2}},
  };
  struct Extras {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> vertices;
  };
  const std::vector<Extras> variants = {
      {{}, {{0, 0}}},
      {{}, {{5, 5}}},
      {{{{0, 0}, {1, 0}}}, {}},
      {{{{4, 5}, {5, 5}}}, {}},
      {{{{3, 3}, {4, 3}}}, {}},
      {{{{3, 3}, {3, 4}}}, {}},
      {{{{2, 3}, {2, 4}}}, {}},
      {{{{3, 3}, {4, 3}}, {{4, 3}, {4, 4}}}, {}},
      {{{{2, 1}, {3, 1}}}, {}},
      {{{{0, 5}, {1, 5}}}, {{0, 0}}},
      {{{{2, 0}, {2, 1}}}, {}},
      {{{{4, 1}, {4, 2}}, {{4, 2}, {4, 3}}}, {}},
      {{}, {{3, 3}, {5, 0}}},
  };
  std::vector<CubicalSet> out;
  std::set<std::string> seen;
  for (const auto& variant : variants) {
    for (const auto& base : bases) {
      std::vector<Edge> edges;
      for (const auto& [a, b] : variant.edges) edges.push_back(Edge::between(a, b));
      CubicalSet s = build_cubical_set(kSide, kSide, base, edges, variant.vertices);
      if (s.extra_edges().empty() && s.extra_vertices().empty()) continue;
      if (!seen.insert(serialize_shape(s)).second) continue;
      out.push_back(std::move(s));
      if (out.size() == 50) return out;
    }
  }
  throw InvariantViolation("extras suite has fewer than 50 distinct cases");
}

namespace {

void check_one(const CubicalSet& s, std::vector<Disagreement>& out, std::size_t& disks) {
  const CriterionReport c = evaluate(s);
  const OracleReport o = is_disk_oracle(s);
  if (o.is_disk) ++disks;
  if ((c.verdict == Verdict::disk) != o.is_disk) out.push_back({serialize_shape(s), c.verdict, o.is_disk});
}

}  // namespace

CrosscheckReport enumerate_crosscheck(int width, int height, bool include_extras, unsigned jobs) {
  if (width < 1 || height < 1 || width * height > 20) {
    throw ContractViolation("enumerate_crosscheck: width * height must be between 1 and 20");
  }
  CrosscheckReport report;
  report.width = width;
  report.height = height;
  report.include_extras = include_extras;

  const std::uint32_t n = static_cast<std::uint32_t>(width * height);
  const std::uint32_t total = (1u << n) - 1;
  jobs = std::max(1u, jobs);

  std::atomic<std::uint32_t> next{1};
  std::vector<std::vector<Disagreement>> found(jobs);
  std::vector<std::size_t> disks(jobs, 0);
  constexpr std::uint32_t kChunk = 1024;
  auto worker = [&](unsigned id) {
    for (;;) {
      const std::uint32_t lo = next.fetch_add(kChunk);
      if (lo > total) break;
      const std::uint32_t hi = std::min<std::uint64_t>(static_cast<std::uint64_t>(lo) + kChunk - 1, total);
      for (std::uint32_t mask = lo; mask <= hi; ++mask) {
        std::vector<Cell> cells;
        for (std::uint32_t bit = 0; bit < n; ++bit)
          if (mask & (1u << bit)) cells.push_back({static_cast<int>(bit) % width, static_cast<int>(bit) / width});
        check_one(build_cubical_set(width, height, std::move(cells)), found[id], disks[id]);
        if (mask == total) break;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  report.shapes = total;

  if (include_extras) {
    std::vector<Disagreement> extra_found;
    std::size_t extra_disks = 0;
    for (const CubicalSet& s : extras_suite()) {
      check_one(s, extra_found, extra_disks);
      ++report.extras_cases;
    }
    found.push_back(std::move(extra_found));
    disks.push_back(extra_disks);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    report.disagreements.insert(report.disagreements.end(), found[i].begin(), found[i].end());
    report.disk_count += disks[i];
  }
  std::sort(report.disagreements.begin(), report.disagreements.end());
  return report;
}

}  // namespace diskcert
