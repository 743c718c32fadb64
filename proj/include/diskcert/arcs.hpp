#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "diskcert/cubical.hpp"
#include "diskcert/geometry.hpp"
#include "diskcert/raster.hpp"

namespace diskcert {

enum class ArcRegion : std::uint8_t { interior, complement, mixed };

// Injective polyline in fixed-point units.
struct Arc {
  std::vector<Point> vertices;
  ArcRegion region = ArcRegion::mixed;
  std::optional<BoundaryElement> start;    // element at vertices.front(), if any
  std::optional<BoundaryElement> end;      // element at vertices.back(), if any
  std::optional<BoundaryElement> through;  // crosscuts: the element they pass
};

// Arc from x1 to x2 through the open region: a leg into an incident region
// cell, a BFS path of cell centres and shared-edge midpoints, a leg out.
// Throws ContractViolation for an inaccessible endpoint or x1 == x2 and
// NoArcError when the endpoints lie in different region components.
Arc region_arc(const CubicalSet& set, Region region, const BoundaryElement& x1, const BoundaryElement& x2);

// Boundary vertices at maximal distance; ties go to the least pair.
std::pair<BoundaryElement, BoundaryElement> choose_endpoints(const CubicalSet& set);

enum class ArcSide : std::uint8_t { k1, k2 };

// Component counts of the open pieces on each side of gamma. Each is 1 for a
// valid split.
struct SidePieces {
  int interior_inside = 0;    // D1 within B1
  int complement_inside = 0;  // D2 within B1
  int interior_outside = 0;
  int complement_outside = 0;
};

// Rasterized state shared by the split and every order computed on it.
struct SplitGeometry {
  CubicalSet set;
  TetraGrid grid;                    // layers: boundary, gamma_interior, gamma_complement
  std::vector<std::uint8_t> inside;  // per triangle: 1 when strictly inside gamma
};

struct JordanSplit {
  BoundaryElement z1;
  BoundaryElement z2;
  Arc gamma_interior;    // z1 -> z2 through Int D
  Arc gamma_complement;  // z1 -> z2 through the complement
  std::vector<Point> gamma;  // closed ring: interior arc, then complement arc backwards
  std::vector<BoundaryElement> k1;  // boundary elements in B1, sorted
  std::vector<BoundaryElement> k2;  // boundary elements outside Int B1, sorted
  SidePieces pieces;
  std::shared_ptr<const SplitGeometry> geometry;

  const CubicalSet& set() const { return geometry->set; }
  const std::vector<BoundaryElement>& arc(ArcSide side) const { return side == ArcSide::k1 ? k1 : k2; }
  // Exact crossing parity against gamma.
  PolygonSide classify(Point p) const { return locate_in_polygon(gamma, p); }
};

// Requires a disk verdict (ContractViolation otherwise). Throws
// InvariantViolation if gamma fails to be a simple closed curve or the
// parity and flood-fill sides disagree.
JordanSplit jordan_split(const CubicalSet& set, const BoundaryElement& z1, const BoundaryElement& z2);

// Arc from a point of the interior part of gamma through x to a point of the
// complement part, staying on the chosen side of gamma and meeting the
// boundary only at x. With avoid, the result is disjoint from it.
Arc crosscut(const JordanSplit& split, ArcSide side, const BoundaryElement& x, const Arc* avoid = nullptr);

// Audits.
bool arc_is_injective(const Arc& arc);
// Every point except the two ends lies in the arc's open region.
bool arc_in_region(const CubicalSet& set, const Arc& arc);
// The arc meets the boundary of D in exactly the representative of x.
bool touches_boundary_only_at(const CubicalSet& set, const Arc& arc, const BoundaryElement& x);

}  // namespace diskcert
