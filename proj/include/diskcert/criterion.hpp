#pragma once

#include <string_view>
#include <vector>

#include "diskcert/cubical.hpp"

namespace diskcert {

enum class Verdict : std::uint8_t { disk, not_disk, precondition_failed };

std::string_view to_string(Verdict v);

struct Connectivity {
  bool connected = false;
  int components = 0;
};

struct CriterionReport {
  bool nonempty_interior = false;
  Connectivity cond1;  // interior connected
  Connectivity cond2;  // complement connected
  std::vector<BoundaryElement> cond3_failures;  // not accessible from the interior
  std::vector<BoundaryElement> cond4_failures;  // not accessible from the complement
  Verdict verdict = Verdict::precondition_failed;

  bool cond3() const { return cond3_failures.empty(); }
  bool cond4() const { return cond4_failures.empty(); }
};

Connectivity check_connectivity(const CubicalSet& set, Region region);

// Local incidence rule. Throws ContractViolation if el is not on the boundary.
bool check_accessibility(const CubicalSet& set, const BoundaryElement& el, Region region);

CriterionReport evaluate(const CubicalSet& set);

}  // namespace diskcert
