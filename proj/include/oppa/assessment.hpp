#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oppa/model.hpp"

namespace oppa {

/// Coverage of one element's linked children by a method: which children
/// the framework requires, which of those the method adopts, and the ratio.
struct CoverageDetail {
    ElementId subject;
    std::set<ElementId> required;
    std::set<ElementId> adopted;
    std::set<ElementId> missing;
    double ratio = 0.0;

    bool operator==(const CoverageDetail&) const = default;
};

/// `missing-principle`: a principle the framework requires for an adopted
/// objective that the method does not adopt. `unrealized-principle`: an
/// adopted principle supporting an adopted objective with zero of its
/// linked practices adopted.
struct SuspectFlag {
    std::string code;
    ElementId subject;
    ElementId context;

    auto operator<=>(const SuspectFlag&) const = default;
};

struct ObjectiveAdequacy {
    CoverageDetail principle_coverage;
    std::vector<CoverageDetail> practice_coverage;  // one per adopted supporting principle
    double score = 0.0;

    bool operator==(const ObjectiveAdequacy&) const = default;
};

/// Result of the top-down traversal: per-objective coverage and score,
/// aggregate score, and the suspect flags.
struct AdequacyReport {
    ElementId method;
    std::map<ElementId, ObjectiveAdequacy> per_objective;
    double overall_score = 0.0;
    std::vector<SuspectFlag> suspect_flags;

    bool operator==(const AdequacyReport&) const = default;
};

enum class AttainmentKind { Capability, Effectiveness };

std::string to_token(AttainmentKind kind);
std::optional<AttainmentKind> attainment_kind_from_token(const std::string& token);

/// Bottom-up attainment of one element. `attainment` is empty when no
/// linked child carries an assessed value (`unassessed`).
struct AttainmentDetail {
    ElementId subject;
    std::optional<double> attainment;
    double evidence_coverage = 0.0;
    int observed_indicators = 0;
    int linked_indicators = 0;
    std::vector<std::pair<ElementId, double>> contributing;

    bool operator==(const AttainmentDetail&) const = default;
};

/// Result of a bottom-up traversal from indicator observations. Capability
/// reads people/process/project indicators; effectiveness reads
/// process-artifact/product indicators.
struct AttainmentReport {
    AttainmentKind kind = AttainmentKind::Capability;
    ElementId method;
    std::string organization;
    std::map<ElementId, AttainmentDetail> per_practice;
    std::map<ElementId, AttainmentDetail> per_principle;
    std::map<ElementId, AttainmentDetail> per_objective;
    std::optional<double> overall;
    AdequacyReport adequacy_context;
    bool qualified = false;

    bool operator==(const AttainmentReport&) const = default;
};

struct ComparisonRow {
    ElementId method;
    double overall_score = 0.0;
    /// Empty optional renders as `not-claimed`.
    std::map<ElementId, std::optional<double>> per_objective;

    bool operator==(const ComparisonRow&) const = default;
};

struct ComparisonTable {
    FrameworkMetadata framework;
    std::vector<ElementId> objectives;  // union across methods, sorted
    std::vector<ComparisonRow> rows;    // sorted by method id

    bool operator==(const ComparisonTable&) const = default;
};

/// Top-down adequacy per the scoring rule
///   score(o) = principle_ratio(o) * mean over adopted required principles
///              of their practice ratios, 0 when none is adopted.
/// Organization-independent: consumes no observations.
/// Throws Error `framework-invalid` or `method-invalid`.
AdequacyReport assess_adequacy(const ReferenceFramework& framework,
                               const MethodDefinition& method);

/// Bottom-up capability from people/process/project observations. The
/// adequacy report must be supplied first (`adequacy-missing` otherwise);
/// it must match the method, as must the observation set
/// (`mismatched-method`). Throws `framework-invalid`, `method-invalid`,
/// `observations-invalid` when validation fails.
AttainmentReport assess_capability(const ReferenceFramework& framework,
                                   const MethodDefinition& method,
                                   const ObservationSet& observations,
                                   const AdequacyReport* adequacy);

/// Same traversal with the process-artifact/product category filter.
AttainmentReport assess_effectiveness(const ReferenceFramework& framework,
                                      const MethodDefinition& method,
                                      const ObservationSet& observations,
                                      const AdequacyReport* adequacy);

/// Adequacy of several methods side by side; rows sorted by method id.
/// Throws `method-invalid` naming the offender.
ComparisonTable compare_adequacy(const ReferenceFramework& framework,
                                 const std::vector<MethodDefinition>& methods);

enum class Direction { TopDown, BottomUp };

/// Transitive closure along objective->principle->practice->indicator
/// links (or the transpose), excluding the start element itself.
/// Throws `framework-invalid` or `unknown-element`.
std::set<ElementId> reachability(const ReferenceFramework& framework, Direction direction,
                                 const ElementId& start);

}  // namespace oppa
