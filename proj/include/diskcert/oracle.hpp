#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diskcert/criterion.hpp"
#include "diskcert/cubical.hpp"

namespace diskcert {

// Combinatorial disk test over the cell complex of D, written without the
// criterion's classification or connectivity helpers.
struct OracleReport {
  bool connected = false;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  bool manifold_with_boundary = false;
  bool boundary_nonempty = false;
  std::optional<std::vector<BoundaryElement>> boundary_cycle;
  bool is_disk = false;
};

OracleReport is_disk_oracle(const CubicalSet& set);

// Alternating vertex/edge walk around the boundary, starting at the least
// boundary vertex. Throws NoCycleError when the boundary branches or has
// more than one component.
std::vector<BoundaryElement> boundary_cycle(const CubicalSet& set);

struct Disagreement {
  std::string shape;  // serialized shape file
  Verdict criterion = Verdict::not_disk;
  bool oracle_disk = false;

  friend auto operator<=>(const Disagreement& a, const Disagreement& b) { return a.shape <=> b.shape; }
  friend bool operator==(const Disagreement& a, const Disagreement& b) { return a.shape == b.shape; }
};

struct CrosscheckReport {
  int width = 0;
  int height = 0;
  bool include_extras = false;
  std::size_t shapes = 0;        // exhaustive cell subsets checked
  std::size_t extras_cases = 0;  // curated cases checked
  std::size_t disk_count = 0;    // shapes the oracle accepted
  std::vector<Disagreement> disagreements;  // sorted
};

// Fixed suite of 50 sets with dangling edges and stray vertices.
std::vector<CubicalSet> extras_suite();

// Every nonempty cell subset of a width x height grid (width * height <= 20),
// plus the extras suite when requested, split across `jobs` threads.
CrosscheckReport enumerate_crosscheck(int width, int height, bool include_extras, unsigned jobs = 1);

}  // namespace diskcert
