#include <doctest.h>

#include <random>

#include "diskcert/cubical.hpp"
#include "diskcert/errors.hpp"
#include "diskcert/shape_io.hpp"
#include "support.hpp"

using namespace diskcert;
using testing::data_path;

namespace {

int count_edges(const std::vector<BoundaryElement>& els) {
  int n = 0;
  for (const auto& e : els) n += e.is_vertex() ? 0 : 1;
  return n;
}

// Edge-adjacency components of the cell set, by plain union-find.
int cell_components(const CubicalSet& set) {
  std::vector<int> parent(static_cast<std::size_t>(set.width() * set.height()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Cell& c : set.cells()) {
    const int id = c.y * set.width() + c.x;
    if (set.cell(c.x + 1, c.y)) parent[find(id)] = find(id + 1);
    if (set.cell(c.x, c.y + 1)) parent[find(id)] = find(id + set.width());
  }
  int roots = 0;
  for (const Cell& c : set.cells()) roots += find(c.y * set.width() + c.x) == c.y * set.width() + c.x ? 1 : 0;
  return roots;
}

}  // namespace

TEST_CASE("construction keeps uncovered extras and drops covered ones") {
  const CubicalSet one = build_cubical_set(1, 1, {{0, 0}});
  CHECK(one.cells().size() == 1);
  CHECK(one.extra_edges().empty());
  CHECK(one.extra_vertices().empty());

  std::vector<Cell> ring;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x)
      if (x != 1 || y != 1) ring.push_back({x, y});
  CHECK(build_cubical_set(3, 3, ring).cells().size() == 8);

  const CubicalSet dangling = build_cubical_set(3, 1, {{0, 0}}, {Edge::between({1, 0}, {2, 0})});
  CHECK(dangling.cells().size() == 1);
  REQUIRE(dangling.extra_edges().size() == 1);
  CHECK(dangling.contains(Vertex{2, 0}));
  CHECK(dangling.contains(Edge::between({1, 0}, {2, 0})));

  const CubicalSet covered =
      build_cubical_set(2, 1, {{0, 0}}, {Edge::between({0, 0}, {1, 0}), Edge::between({1, 1}, {1, 0})}, {{1, 1}});
  CHECK(covered.extra_edges().empty());
  CHECK(covered.extra_vertices().empty());
  CHECK(covered == build_cubical_set(2, 1, {{0, 0}}));

  CHECK(build_cubical_set(2, 2, {{1, 1}, {0, 0}, {1, 1}}).cells() == std::vector<Cell>{{0, 0}, {1, 1}});
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(build_cubical_set(0, 1, {}), InputError);
  CHECK_THROWS_AS(build_cubical_set(kMaxGridSide + 1, 1, {}), InputError);
  CHECK_THROWS_AS(build_cubical_set(2, 2, {{2, 0}}), InputError);
  CHECK_THROWS_AS(build_cubical_set(2, 2, {}, {Edge{2, 0, Axis::horizontal}}), InputError);
  CHECK_THROWS_AS(build_cubical_set(2, 2, {}, {}, {{3, 0}}), InputError);
  CHECK_THROWS_AS(Edge::between({0, 0}, {1, 1}), InputError);
  CHECK_THROWS_AS(Edge::between({0, 0}, {2, 0}), InputError);
  CHECK(Edge::between({1, 0}, {0, 0}) == Edge{0, 0, Axis::horizontal});
}

TEST_CASE("element labels and representatives") {
  const auto v = BoundaryElement::of(Vertex{2, 3});
  const auto e = BoundaryElement::of(Edge{1, 0, Axis::vertical});
  CHECK(v.label() == "V 2 3");
  CHECK(e.label() == "E 1 0 1 1");
  CHECK(v.representative() == Point{32, 48});
  CHECK(e.representative() == Point{16, 8});
  CHECK(e.closure() == std::vector<Vertex>{{1, 0}, {1, 1}});
  CHECK(v.closure() == std::vector<Vertex>{{2, 3}});
}

TEST_CASE("classification of the lone square, the 2x2 block and the diagonal pair") {
  const Classification sq = classify(load_shape_file(data_path("square.txt")));
  CHECK(sq.interior_cells.size() == 1);
  CHECK(sq.interior_edges.empty());
  CHECK(sq.interior_vertices.empty());
  CHECK(sq.boundary_elements.size() == 8);
  CHECK(count_edges(sq.boundary_elements) == 4);

  const Classification block = classify(parse_shape("2 2\n##\n##\n"));
  CHECK(block.interior_cells.size() == 4);
  CHECK(block.interior_edges.size() == 4);
  CHECK(block.interior_vertices == std::vector<Vertex>{{1, 1}});
  CHECK(block.boundary_elements.size() == 16);
  CHECK(count_edges(block.boundary_elements) == 8);

  const CubicalSet diag = load_shape_file(data_path("diagonal.txt"));
  CHECK_FALSE(is_interior(diag, Vertex{1, 1}));
  CHECK(is_boundary_element(diag, BoundaryElement::of(Vertex{1, 1})));
  CHECK(classify(diag).interior_vertices.empty());
}

TEST_CASE("classification matches the brute-force face census") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const CubicalSet set = testing::random_set(rng, 6);
    const Classification c = classify(set);
    const testing::FaceCounts ref = testing::brute_classify(set);
    CHECK(static_cast<int>(c.interior_cells.size()) == ref.interior_cells);
    CHECK(static_cast<int>(c.interior_edges.size()) == ref.interior_edges);
    CHECK(static_cast<int>(c.interior_vertices.size()) == ref.interior_vertices);
    CHECK(count_edges(c.boundary_elements) == ref.boundary_edges);
    CHECK(static_cast<int>(c.boundary_elements.size()) == ref.boundary());
    CHECK(std::is_sorted(c.boundary_elements.begin(), c.boundary_elements.end()));
    CHECK(c.boundary_elements == boundary_elements(set));
  }
}

TEST_CASE("partition and closedness on the frame") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CubicalSet set = testing::random_set(rng, 5);
    for (int y = -1; y <= set.height() + 1; ++y) {
      for (int x = -1; x <= set.width() + 1; ++x) {
        const Vertex v{x, y};
        const bool in_d = set.contains(v);
        const bool interior = is_interior(set, v);
        const bool boundary = is_boundary_element(set, BoundaryElement::of(v));
        CHECK(int(interior) + int(boundary) + int(!in_d) == 1);
        for (Axis a : {Axis::horizontal, Axis::vertical}) {
          const Edge e{x, y, a};
          if (!set.contains(e)) continue;
          CHECK(set.contains(e.first()));
          CHECK(set.contains(e.second()));
          CHECK(int(is_interior(set, e)) + int(is_boundary_element(set, BoundaryElement::of(e))) == 1);
        }
      }
    }
    for (const Cell& c : set.cells()) {
      CHECK(set.contains(Edge{c.x, c.y, Axis::horizontal}));
      CHECK(set.contains(Edge{c.x, c.y + 1, Axis::horizontal}));
      CHECK(set.contains(Edge{c.x, c.y, Axis::vertical}));
      CHECK(set.contains(Edge{c.x + 1, c.y, Axis::vertical}));
      CHECK(set.contains(Vertex{c.x + 1, c.y + 1}));
    }
  }
}

TEST_CASE("region components on the named shapes") {
  const CubicalSet block = load_shape_file(data_path("block3.txt"));
  CHECK(region_components(block, Region::interior).size() == 1);
  CHECK(region_components(block, Region::complement).size() == 1);
  CHECK(region_components(load_shape_file(data_path("annulus.txt")), Region::complement).size() == 2);
  CHECK(region_components(load_shape_file(data_path("diagonal.txt")), Region::interior).size() == 2);
}

TEST_CASE("interior components equal cell edge-adjacency components, 4x4 exhaustive") {
  int mismatches = 0;
  for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
    const CubicalSet set = testing::from_mask(4, 4, mask);
    if (static_cast<int>(region_components(set, Region::interior).size()) != cell_components(set)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("region components agree with the face flood fill") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 600; ++trial) {
    const CubicalSet set = testing::random_set(rng, 6);
    CHECK(static_cast<int>(region_components(set, Region::interior).size()) ==
          testing::flood_components(set, true));
    CHECK(static_cast<int>(region_components(set, Region::complement).size()) ==
          testing::flood_components(set, false));
  }
}

TEST_CASE("adding a cell changes component counts within local bounds") {
  // A new cell touches at most four complement pieces around it, so the
  // complement count can rise by at most three; edge-adjacent interior
  // neighbours all end up in the new cell's component.
  std::mt19937_64 rng(21);
  int rises = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const CubicalSet before = testing::random_set(rng, 5);
    std::vector<Cell> free;
    for (int y = 0; y < before.height(); ++y)
      for (int x = 0; x < before.width(); ++x)
        if (!before.cell(x, y)) free.push_back({x, y});
    if (free.empty()) continue;
    const Cell add = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    std::vector<Cell> cells = before.cells();
    cells.push_back(add);
    const CubicalSet after =
        build_cubical_set(before.width(), before.height(), cells, before.extra_edges(), before.extra_vertices());
    const auto cb = region_components(before, Region::complement).size();
    const auto ca = region_components(after, Region::complement).size();
    CHECK(ca <= cb + 3);
    if (ca > cb) ++rises;
    const auto comps = region_components(after, Region::interior);
    auto component_of = [&](Cell c) {
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (std::binary_search(comps[i].begin(), comps[i].end(), c)) return static_cast<int>(i);
      return -1;
    };
    for (Cell n : {Cell{add.x + 1, add.y}, Cell{add.x - 1, add.y}, Cell{add.x, add.y + 1}, Cell{add.x, add.y - 1}}) {
      if (after.cell(n)) CHECK(component_of(n) == component_of(add));
    }
  }
  // Closing a hole does happen in this sample; the bound above is the real invariant.
  CHECK(rises > 0);
}

TEST_CASE("subdivision doubles the grid and keeps the topology") {
  const CubicalSet sq = load_shape_file(data_path("square.txt"));
  const CubicalSet s2 = subdivide(sq);
  CHECK(s2.width() == 2);
  CHECK(s2.cells().size() == 4);
  CHECK(boundary_elements(s2).size() == 16);
  const CubicalSet dang = subdivide(load_shape_file(data_path("dangling.txt")));
  CHECK(dang.extra_edges().size() == 2);
  CHECK(testing::brute_classify(dang).boundary() == 16 + 4);
}

TEST_CASE("point location relative to D") {
  const CubicalSet sq = load_shape_file(data_path("square.txt"));
  CHECK(locate(sq, {8, 8}) == Location::interior);
  CHECK(locate(sq, {0, 8}) == Location::boundary);
  CHECK(locate(sq, {16, 16}) == Location::boundary);
  CHECK(locate(sq, {24, 8}) == Location::exterior);
  CHECK(incident_region_cells(sq, BoundaryElement::of(Vertex{0, 0}), Region::complement).size() == 3);
  CHECK(incident_region_cells(sq, BoundaryElement::of(Vertex{0, 0}), Region::interior) == std::vector<Cell>{{0, 0}});
}
