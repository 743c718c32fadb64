#pragma once

#include <optional>
#include <string>

#include "diskcert/oracle.hpp"
#include "diskcert/pipeline.hpp"

namespace diskcert {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportDocument {
  std::string command;
  std::optional<CubicalSet> input;  // digest and size are reported
  std::optional<CriterionReport> criterion;
  std::optional<OracleReport> oracle;
  std::optional<Certificate> certificate;  // parameterization section when it holds a split
  std::optional<CrosscheckReport> crosscheck;
  std::optional<std::string> error;
  std::optional<double> timing_ms;  // left out unless requested
};

// Compact JSON with keys in lexicographic order. Identical documents give
// identical bytes.
std::string emit_report(const ReportDocument& doc);

// Short plain-text rendering for terminals.
std::string emit_text(const ReportDocument& doc);

}  // namespace diskcert
