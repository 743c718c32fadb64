#include "diskcert/criterion.hpp"

#include "diskcert/errors.hpp"

namespace diskcert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::disk:
      return "disk";
    case Verdict::not_disk:
      return "not_disk";
    case Verdict::precondition_failed:
      return "precondition_failed";
  }
  return "unknown";
}

Connectivity check_connectivity(const CubicalSet& set, Region region) {
  const int n = static_cast<int>(region_components(set, region).size());
  return {n == 1, n};
}

bool check_accessibility(const CubicalSet& set, const BoundaryElement& el, Region region) {
  if (!is_boundary_element(set, el)) {
    throw ContractViolation("check_accessibility: " + el.label() + " is not a boundary element");
  }
  return !incident_region_cells(set, el, region).empty();
}

CriterionReport evaluate(const CubicalSet& set) {
  CriterionReport r;
  r.nonempty_interior = !set.cells().empty();
  r.cond1 = check_connectivity(set, Region::interior);
  r.cond2 = check_connectivity(set, Region::complement);
  for (const BoundaryElement& el : boundary_elements(set)) {
    if (!check_accessibility(set, el, Region::interior)) r.cond3_failures.push_back(el);
    if (!check_accessibility(set, el, Region::complement)) r.cond4_failures.push_back(el);
  }
  if (!r.nonempty_interior) {
    r.verdict = Verdict::precondition_failed;
  } else if (r.cond1.connected && r.cond2.connected && r.cond3() && r.cond4()) {
    r.verdict = Verdict::disk;
  } else {
    r.verdict = Verdict::not_disk;
  }
  return r;
}

}  // namespace diskcert
