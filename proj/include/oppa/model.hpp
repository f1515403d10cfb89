#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oppa {

/// Identifier token for catalog elements: lowercase [a-z0-9-]+, at most 64
/// characters. Ids are unique within their element kind in a framework.
using ElementId = std::string;

bool is_valid_element_id(const std::string& value);

enum class IndicatorCategory {
    People,
    Process,
    Project,
    ProcessArtifact,
    Product,
};

/// Categories consumed by the capability assessment.
bool is_capability_category(IndicatorCategory category);
/// Categories consumed by the effectiveness assessment.
bool is_effectiveness_category(IndicatorCategory category);

std::string to_token(IndicatorCategory category);
std::optional<IndicatorCategory> category_from_token(const std::string& token);

/// Ordinal observation scale with fixed numeric mapping
/// absent=0, initial=0.25, partial=0.5, substantial=0.75, full=1.
enum class ObservationLevel {
    Absent,
    Initial,
    Partial,
    Substantial,
    Full,
};

double level_value(ObservationLevel level);
std::string to_token(ObservationLevel level);
std::optional<ObservationLevel> level_from_token(const std::string& token);

struct Objective {
    ElementId id;
    std::string name;
    std::string description;
    std::string source;

    bool operator==(const Objective&) const = default;
};

struct Principle {
    ElementId id;
    std::string name;
    std::string description;
    std::string source;

    bool operator==(const Principle&) const = default;
};

struct Practice {
    ElementId id;
    std::string name;
    std::string description;
    std::string source;

    bool operator==(const Practice&) const = default;
};

struct Indicator {
    ElementId id;
    std::string name;
    IndicatorCategory category = IndicatorCategory::People;
    std::string description;
    std::string source;

    bool operator==(const Indicator&) const = default;
};

using LinkPair = std::pair<ElementId, ElementId>;

struct FrameworkMetadata {
    std::string name;
    std::string version;

    bool operator==(const FrameworkMetadata&) const = default;
};

/// The four-layer knowledge base: objectives, principles, practices and
/// indicators, plus the three link relations joining adjacent layers.
/// Holds whatever a document contained; structural guarantees come from
/// validate_framework, not from construction.
struct ReferenceFramework {
    FrameworkMetadata metadata;
    std::vector<Objective> objectives;
    std::vector<Principle> principles;
    std::vector<Practice> practices;
    std::vector<Indicator> indicators;
    std::vector<LinkPair> op_links;  // objective -> principle
    std::vector<LinkPair> pp_links;  // principle -> practice
    std::vector<LinkPair> pi_links;  // practice -> indicator

    /// Copy with elements sorted by id and links sorted lexicographically.
    ReferenceFramework canonicalized() const;

    /// Structural equality: order of elements and links is irrelevant.
    bool operator==(const ReferenceFramework& other) const;
};

struct MethodDefinition {
    ElementId id;
    std::string name;
    std::set<ElementId> objectives;
    std::set<ElementId> principles;
    std::set<ElementId> practices;
    std::string notes;

    bool operator==(const MethodDefinition&) const = default;
};

/// Calendar date, ISO-8601 `YYYY-MM-DD` on the wire.
struct Date {
    int year = 1970;
    unsigned month = 1;
    unsigned day = 1;

    bool ok() const;
    std::string to_string() const;
    static std::optional<Date> parse(const std::string& text);

    auto operator<=>(const Date&) const = default;
};

struct IndicatorObservation {
    ElementId indicator;
    ObservationLevel level = ObservationLevel::Absent;
    std::string evidence;
    Date observed_on;

    bool operator==(const IndicatorObservation&) const = default;
};

struct ObservationSet {
    std::string organization;
    ElementId method;
    std::vector<IndicatorObservation> observations;

    ObservationSet canonicalized() const;
    bool operator==(const ObservationSet& other) const;
};

enum class Severity { Error, Warning };

std::string to_token(Severity severity);

/// Subject of a validation issue: a single element id or a link pair.
struct IssueSubject {
    ElementId id;
    ElementId second;  // empty unless the subject is a link

    bool is_link() const { return !second.empty(); }
    std::string to_string() const;

    auto operator<=>(const IssueSubject&) const = default;
};

struct Issue {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    IssueSubject subject;

    bool operator==(const Issue&) const = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Issue> issues;

    bool has_errors() const;
    bool has_warnings() const;

    bool operator==(const ValidationReport&) const = default;
};

/// Sorts by (code, subject, severity, message) and recomputes `valid`.
void finalize_report(ValidationReport& report);

}  // namespace oppa
