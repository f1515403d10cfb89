#include "oppa/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace oppa {

bool is_valid_element_id(const std::string& value) {
    if (value.empty() || value.size() > 64) return false;
    return std::all_of(value.begin(), value.end(), [](unsigned char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    });
}

bool is_capability_category(IndicatorCategory category) {
    return category == IndicatorCategory::People || category == IndicatorCategory::Process ||
           category == IndicatorCategory::Project;
}

bool is_effectiveness_category(IndicatorCategory category) {
    return !is_capability_category(category);
}

std::string to_token(IndicatorCategory category) {
    switch (category) {
        case IndicatorCategory::People: return "people";
        case IndicatorCategory::Process: return "process";
        case IndicatorCategory::Project: return "project";
        case IndicatorCategory::ProcessArtifact: return "process-artifact";
        case IndicatorCategory::Product: return "product";
    }
    return "people";
}

std::optional<IndicatorCategory> category_from_token(const std::string& token) {
    if (token == "people") return IndicatorCategory::People;
    if (token == "process") return IndicatorCategory::Process;
    if (token == "project") return IndicatorCategory::Project;
    if (token == "process-artifact") return IndicatorCategory::ProcessArtifact;
    if (token == "product") return IndicatorCategory::Product;
    return std::nullopt;
}

double level_value(ObservationLevel level) {
    switch (level) {
        case ObservationLevel::Absent: return 0.0;
        case ObservationLevel::Initial: return 0.25;
        case ObservationLevel::Partial: return 0.5;
        case ObservationLevel::Substantial: return 0.75;
        case ObservationLevel::Full: return 1.0;
    }
    return 0.0;
}

std::string to_token(ObservationLevel level) {
    switch (level) {
        case ObservationLevel::Absent: return "absent";
        case ObservationLevel::Initial: return "initial";
        case ObservationLevel::Partial: return "partial";
        case ObservationLevel::Substantial: return "substantial";
        case ObservationLevel::Full: return "full";
    }
    return "absent";
}

std::optional<ObservationLevel> level_from_token(const std::string& token) {
    if (token == "absent") return ObservationLevel::Absent;
    if (token == "initial") return ObservationLevel::Initial;
    if (token == "partial") return ObservationLevel::Partial;
    if (token == "substantial") return ObservationLevel::Substantial;
    if (token == "full") return ObservationLevel::Full;
    return std::nullopt;
}

namespace {

template <typename Element>
void sort_by_id(std::vector<Element>& elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
}

}  // namespace

ReferenceFramework ReferenceFramework::canonicalized() const {
    ReferenceFramework out = *this;
    sort_by_id(out.objectives);
    sort_by_id(out.principles);
    sort_by_id(out.practices);
    sort_by_id(out.indicators);
    std::sort(out.op_links.begin(), out.op_links.end());
    std::sort(out.pp_links.begin(), out.pp_links.end());
    std::sort(out.pi_links.begin(), out.pi_links.end());
    return out;
}

bool ReferenceFramework::operator==(const ReferenceFramework& other) const {
    const ReferenceFramework a = canonicalized();
    const ReferenceFramework b = other.canonicalized();
    return a.metadata == b.metadata && a.objectives == b.objectives &&
           a.principles == b.principles && a.practices == b.practices &&
           a.indicators == b.indicators && a.op_links == b.op_links &&
           a.pp_links == b.pp_links && a.pi_links == b.pi_links;
}

bool Date::ok() const {
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    return ymd.ok();
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, month, day);
    return buf;
}

std::optional<Date> Date::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto digits = [&](size_t from, size_t count, int& out) {
        out = 0;
        for (size_t i = from; i < from + count; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
            out = out * 10 + (text[i] - '0');
        }
        return true;
    };
    int y = 0, m = 0, d = 0;
    if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) return std::nullopt;
    Date date{y, static_cast<unsigned>(m), static_cast<unsigned>(d)};
    if (!date.ok()) return std::nullopt;
    return date;
}

ObservationSet ObservationSet::canonicalized() const {
    ObservationSet out = *this;
    std::sort(out.observations.begin(), out.observations.end(),
              [](const IndicatorObservation& a, const IndicatorObservation& b) {
                  if (a.indicator != b.indicator) return a.indicator < b.indicator;
                  if (a.level != b.level) return a.level < b.level;
                  if (a.observed_on != b.observed_on) return a.observed_on < b.observed_on;
                  return a.evidence < b.evidence;
              });
    return out;
}

bool ObservationSet::operator==(const ObservationSet& other) const {
    const ObservationSet a = canonicalized();
    const ObservationSet b = other.canonicalized();
    return a.organization == b.organization && a.method == b.method &&
           a.observations == b.observations;
}

std::string to_token(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

std::string IssueSubject::to_string() const {
    if (is_link()) return id + " -> " + second;
    return id;
}

bool ValidationReport::has_errors() const {
    return std::any_of(issues.begin(), issues.end(),
                       [](const Issue& i) { return i.severity == Severity::Error; });
}

bool ValidationReport::has_warnings() const {
    return std::any_of(issues.begin(), issues.end(),
                       [](const Issue& i) { return i.severity == Severity::Warning; });
}

void finalize_report(ValidationReport& report) {
    std::sort(report.issues.begin(), report.issues.end(), [](const Issue& a, const Issue& b) {
        if (a.code != b.code) return a.code < b.code;
        if (a.subject != b.subject) return a.subject < b.subject;
        if (a.severity != b.severity) return a.severity < b.severity;
        return a.message < b.message;
    });
    report.valid = !report.has_errors();
}

}  // namespace oppa
