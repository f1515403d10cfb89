#pragma once

#include <string>

#include "oppa/assessment.hpp"
#include "oppa/model.hpp"

namespace oppa {

struct RenderOptions {
    bool color = false;
};

/// Stable tabular text: aligned columns, scores at two decimals, gaps and
/// suspect items under a GAPS heading, `unassessed` / `not-claimed`
/// rendered verbatim. Deterministic for equal reports and options.
std::string render_text(const AdequacyReport& report, const RenderOptions& options = {});
std::string render_text(const AttainmentReport& report, const RenderOptions& options = {});
std::string render_text(const ComparisonTable& table, const RenderOptions& options = {});
std::string render_text(const ValidationReport& report, const RenderOptions& options = {});

}  // namespace oppa
