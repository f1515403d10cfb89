#pragma once

#include <string>

#include "oppa/assessment.hpp"
#include "oppa/errors.hpp"
#include "oppa/model.hpp"

namespace oppa {

/// Canonical machine-readable form of each report: format_version 1, maps
/// sorted by key, full-precision scores, `unassessed` / `not-claimed` as
/// literal string markers. emit/parse round-trip structurally.
std::string emit_adequacy_report(const AdequacyReport& report);
AdequacyReport parse_adequacy_report(const std::string& document);

std::string emit_attainment_report(const AttainmentReport& report);
AttainmentReport parse_attainment_report(const std::string& document);

std::string emit_comparison_table(const ComparisonTable& table);
ComparisonTable parse_comparison_table(const std::string& document);

std::string emit_validation_report(const ValidationReport& report);
ValidationReport parse_validation_report(const std::string& document);

}  // namespace oppa
