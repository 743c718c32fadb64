#include <doctest.h>

#include <random>

#include "diskcert/errors.hpp"
#include "diskcert/oracle.hpp"
#include "diskcert/order.hpp"
#include "diskcert/pipeline.hpp"
#include "diskcert/shape_io.hpp"
#include "support.hpp"

using namespace diskcert;
using testing::data_path;

namespace {

BoundaryElement V(int x, int y) { return BoundaryElement::of(Vertex{x, y}); }
BoundaryElement E(int x1, int y1, int x2, int y2) { return BoundaryElement::of(Edge::between({x1, y1}, {x2, y2})); }

// Lone square, a = (0,0), b = (1,1), on the side through the left edge
// and the corner c = (0,1).
OrderedArc square_arc() {
  const CubicalSet sq = load_shape_file(data_path("square.txt"));
  JordanSplit s = jordan_split(sq, V(0, 0), V(1, 1));
  const ArcSide side = std::binary_search(s.k1.begin(), s.k1.end(), V(0, 1)) ? ArcSide::k1 : ArcSide::k2;
  return OrderedArc(std::move(s), side);
}

OrderedArc arc_of(const CubicalSet& set, ArcSide side) {
  const auto [z1, z2] = choose_endpoints(set);
  return OrderedArc(jordan_split(set, z1, z2), side);
}

// Brute-force diameter of the union of closures, in squared cell units.
std::int64_t brute_diameter(const std::vector<BoundaryElement>& els) {
  std::vector<Vertex> pts;
  for (const auto& e : els)
    for (const Vertex& v : e.closure()) pts.push_back(v);
  std::int64_t best = 0;
  for (const Vertex& p : pts) {
    for (const Vertex& q : pts) {
      const std::int64_t dx = p.x - q.x;
      const std::int64_t dy = p.y - q.y;
      best = std::max(best, dx * dx + dy * dy);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("comparator on the lone square") {
  const OrderedArc arc = square_arc();
  const auto c = V(0, 1);
  const auto left = E(0, 0, 0, 1);
  for (const auto& x : arc.elements()) {
    if (x != arc.a()) CHECK(arc.compare(arc.a(), x) == std::strong_ordering::less);
    if (x != arc.b()) CHECK(arc.compare(arc.b(), x) == std::strong_ordering::greater);
    CHECK(arc.compare(x, x) == std::strong_ordering::equal);
  }
  CHECK(arc.compare(left, c) == std::strong_ordering::less);
  CHECK(arc.compare_hosted(left, c, c) == std::strong_ordering::less);
  CHECK(arc.compare_hosted(left, c, left) == std::strong_ordering::less);
  CHECK_THROWS_AS(arc.compare_hosted(left, c, arc.b()), ContractViolation);
  CHECK(sort_boundary(arc) == std::vector<BoundaryElement>{V(0, 0), left, c, E(0, 1, 1, 1), V(1, 1)});
  CHECK(arc.crosscut_pieces(c) == 2);
}

TEST_CASE("intervals, diameters and potentials on the lone square") {
  const OrderedArc arc = square_arc();
  const auto a = arc.a();
  const auto b = arc.b();
  const auto c = V(0, 1);
  const auto left = E(0, 0, 0, 1);
  CHECK(interval_W(arc, c, c) == std::vector<BoundaryElement>{c});
  CHECK(interval_W(arc, a, c) == std::vector<BoundaryElement>{a, left, c});
  CHECK(interval_W(arc, c, a) == std::vector<BoundaryElement>{a, left, c});
  CHECK(interval_W(arc, a, b) == sort_boundary(arc));

  CHECK(rho(arc, c, c) == Length(0));
  CHECK(rho(arc, left, left) == Length(0));
  CHECK(rho(arc, a, c) == Length(1));
  CHECK(rho(arc, a, b) == Length(2));
  CHECK(rho(arc, a, b).to_string() == "sqrt(2)");

  CHECK(signed_f(arc, a, b, a) == -RootSum::of(rho(arc, a, b)));
  CHECK(signed_f(arc, a, b, c).sign() == 0);
  const RootSum fe = signed_f(arc, a, b, left);
  CHECK(fe == RootSum::of(Length(1)) - RootSum::of(Length(2)));
  CHECK(fe.sign() < 0);

  CHECK(midpoint(arc, a, b) == c);
  CHECK_FALSE(midpoint(arc, a, left).has_value());
  CHECK_FALSE(midpoint(arc, c, E(0, 1, 1, 1)).has_value());
  CHECK_THROWS_AS(midpoint(arc, b, a), ContractViolation);
}

TEST_CASE("domino midpoint is the middle element") {
  // Endpoints at the two top corners make the top side a mirror-symmetric arc.
  const CubicalSet dom = load_shape_file(data_path("domino.txt"));
  JordanSplit s = jordan_split(dom, V(0, 0), V(2, 0));
  const ArcSide top = std::binary_search(s.k1.begin(), s.k1.end(), V(1, 0)) ? ArcSide::k1 : ArcSide::k2;
  const OrderedArc arc(std::move(s), top);
  const auto order = sort_boundary(arc);
  REQUIRE(order.size() == 5);
  CHECK(order[2] == V(1, 0));
  CHECK(midpoint(arc, arc.a(), arc.b()) == V(1, 0));
  CHECK(signed_f(arc, arc.a(), arc.b(), V(1, 0)).sign() == 0);
}

TEST_CASE("potential ties between neighbours on a plateau") {
  // a = (0,1), b = (4,2): the left wall edge and the top corner above it sit
  // at the same diameters from both ends.
  const CubicalSet set = parse_shape("4 2\n.##.\n####\n");
  const JordanSplit s = jordan_split(set, V(0, 1), V(4, 2));
  const ArcSide top = std::binary_search(s.k1.begin(), s.k1.end(), V(1, 0)) ? ArcSide::k1 : ArcSide::k2;
  const OrderedArc arc(s, top);
  CHECK(arc.compare(E(1, 0, 1, 1), V(1, 0)) == std::strong_ordering::less);
  CHECK(signed_f(arc, arc.a(), arc.b(), E(1, 0, 1, 1)) == signed_f(arc, arc.a(), arc.b(), V(1, 0)));
}

TEST_CASE("two-element arcs and the 3x3 block order") {
  // 1x1 square with z1, z2 on a shared edge would need adjacent endpoints;
  // build one directly instead.
  const CubicalSet sq = load_shape_file(data_path("square.txt"));
  const JordanSplit s = jordan_split(sq, V(0, 0), E(0, 0, 1, 0));
  const ArcSide side = s.k1.size() == 2 ? ArcSide::k1 : ArcSide::k2;
  REQUIRE(s.arc(side).size() == 2);
  const OrderedArc two(s, side);
  CHECK(sort_boundary(two) == std::vector<BoundaryElement>{V(0, 0), E(0, 0, 1, 0)});

  const CubicalSet block = load_shape_file(data_path("block3.txt"));
  const auto cycle = boundary_cycle(block);
  for (ArcSide k : {ArcSide::k1, ArcSide::k2}) {
    const OrderedArc arc = arc_of(block, k);
    CHECK(contiguous_in_cycle(sort_boundary(arc), cycle));
  }
}

TEST_CASE("order and metric properties on random disks") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const CubicalSet set = testing::random_disk(rng, 6, 48);
    const auto cycle = boundary_cycle(set);
    for (ArcSide side : {ArcSide::k1, ArcSide::k2}) {
      const OrderedArc arc = arc_of(set, side);
      const auto order = sort_boundary(arc);
      CHECK(contiguous_in_cycle(order, cycle));
      CHECK(order.front() == arc.a());
      CHECK(order.back() == arc.b());
      for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(arc.position(order[i]) == i);
        for (std::size_t j = 0; j < order.size(); ++j) {
          const auto expect = i < j ? std::strong_ordering::less
                                    : (i > j ? std::strong_ordering::greater : std::strong_ordering::equal);
          CHECK(arc.compare(order[i], order[j]) == expect);
          if (i != j) CHECK(arc.compare_hosted(order[i], order[j], order[j]) == expect);
          // Diameter equals the brute-force diameter of the interval.
          const auto lo = std::min(i, j);
          const auto hi = std::max(i, j);
          const std::vector<BoundaryElement> w(order.begin() + lo, order.begin() + hi + 1);
          CHECK(interval_W(arc, order[i], order[j]) == w);
          CHECK(rho(arc, order[i], order[j]).squared() == (i == j ? 0 : brute_diameter(w)));
        }
      }
      // Potential is nondecreasing along the order and separates the ends.
      // Neighbours can tie: both diameters may stay flat across a step.
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const RootSum f0 = signed_f(arc, arc.a(), arc.b(), order[i]);
        const RootSum f1 = signed_f(arc, arc.a(), arc.b(), order[i + 1]);
        CHECK(f0 <= f1);
      }
      CHECK(signed_f(arc, arc.a(), arc.b(), arc.a()) < signed_f(arc, arc.a(), arc.b(), arc.b()));
      // Midpoints fall strictly inside their interval.
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          const auto m = midpoint(arc, order[i], order[j]);
          CHECK(m.has_value() == (j > i + 1));
          if (m) {
            CHECK(arc.position(*m) > i);
            CHECK(arc.position(*m) < j);
          }
        }
      }
    }
  }
}
