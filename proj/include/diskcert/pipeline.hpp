#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diskcert/criterion.hpp"
#include "diskcert/oracle.hpp"
#include "diskcert/parameterize.hpp"

namespace diskcert {

struct ArcCertificate {
  ArcSide side = ArcSide::k1;
  std::vector<BoundaryElement> order;
  DyadicNet net;
  Parameterization param;
};

struct AuditSummary {
  std::size_t region_arcs = 0;
  std::size_t crosscuts = 0;
  std::size_t avoid_pairs = 0;
  std::size_t order_pairs = 0;
};

struct Certificate {
  CubicalSet set;
  CriterionReport criterion;
  OracleReport oracle;
  std::optional<JordanSplit> split;
  std::optional<ArcCertificate> k1;
  std::optional<ArcCertificate> k2;
  std::optional<Parameterization> cyclic;
  AuditSummary audits;

  bool is_disk() const { return criterion.verdict == Verdict::disk; }
};

// Same cyclic sequence up to rotation and reflection.
bool cyclic_equivalent(const std::vector<BoundaryElement>& a, const std::vector<BoundaryElement>& b);

// True when `sub` occurs in `cycle` as a contiguous run, read either way.
bool contiguous_in_cycle(const std::vector<BoundaryElement>& sub, const std::vector<BoundaryElement>& cycle);

// Criterion and oracle, then for a disk the full boundary construction with
// every audit. Throws InvariantViolation when the criterion and the oracle
// disagree or any audit fails.
Certificate certify(const CubicalSet& set);

}  // namespace diskcert
