#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "diskcert/cubical.hpp"

// Test-side reference code. Nothing here calls the library's classification,
// connectivity or oracle routines; the point is to check them from outside.
namespace diskcert::testing {

struct FaceCounts {
  int interior_cells = 0;
  int interior_edges = 0;
  int interior_vertices = 0;
  int boundary_edges = 0;
  int boundary_vertices = 0;
  int boundary() const { return boundary_edges + boundary_vertices; }
};

// Classifies every face of the doubled grid by looking at its open star.
FaceCounts brute_classify(const CubicalSet& set);

// Components of the open interior or the open complement, flood-filled over
// face incidence on the doubled grid with a one-cell margin.
int flood_components(const CubicalSet& set, bool interior);

// Point in fixed-point units lies on a face of D that is not interior.
bool point_on_boundary(const CubicalSet& set, Point p);

// Every lattice point of the polyline outside `allowed` is off the
// boundary. Segments must be axis-parallel or of slope +-1.
bool polyline_avoids_boundary_except(const CubicalSet& set, const std::vector<Point>& pts,
                                     const std::vector<Point>& allowed);

// Disk test assembled from the two routines above plus a boundary walk:
// one interior piece, one complement piece, and a boundary made of a single
// cycle in which every vertex meets exactly two boundary edges.
bool reference_is_disk(const CubicalSet& set);

// Cells from a bitmask over a width x height grid, row-major.
CubicalSet from_mask(int width, int height, std::uint32_t mask);

// Polyomino grown from a random seed cell inside a random box up to
// max_side x max_side. Rejected until reference_is_disk holds and the
// boundary has at most max_boundary elements.
CubicalSet random_disk(std::mt19937_64& rng, int max_side, int max_boundary = 1 << 20);

// Random cells and a few random extras, no disk filter.
CubicalSet random_set(std::mt19937_64& rng, int max_side);

// Shape file under tests/data.
std::string data_path(const std::string& name);

}  // namespace diskcert::testing
