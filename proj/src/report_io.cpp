#include "oppa/report_io.hpp"

#include <json.hpp>

namespace oppa {

namespace {

using nlohmann::json;

constexpr const char* kUnassessed = "unassessed";
constexpr const char* kNotClaimed = "not-claimed";

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw ParseError("schema-error", path + ": " + what);
}

json parse_json(const std::string& document) {
    try {
        return json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError("syntax-error", e.what());
    }
}

const json& require_key(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_fail(path, std::string("missing required key '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const std::string& path, const char* key) {
    const json& value = require_key(obj, path, key);
    if (!value.is_string()) schema_fail(path + "." + key, "expected a string");
    return value.get<std::string>();
}

double require_number(const json& obj, const std::string& path, const char* key) {
    const json& value = require_key(obj, path, key);
    if (!value.is_number()) schema_fail(path + "." + key, "expected a number");
    return value.get<double>();
}

bool require_bool(const json& obj, const std::string& path, const char* key) {
    const json& value = require_key(obj, path, key);
    if (!value.is_boolean()) schema_fail(path + "." + key, "expected a boolean");
    return value.get<bool>();
}

int require_int(const json& obj, const std::string& path, const char* key) {
    const json& value = require_key(obj, path, key);
    if (!value.is_number_integer()) schema_fail(path + "." + key, "expected an integer");
    return value.get<int>();
}

void require_header(const json& root, const std::string& expected_kind) {
    if (!root.is_object()) schema_fail("$", "expected an object");
    const json& version = require_key(root, "$", "format_version");
    if (!version.is_number_integer() || version.get<long long>() != 1) {
        schema_fail("$.format_version", "this reader understands format_version 1 only");
    }
    const std::string kind = require_string(root, "$", "kind");
    if (kind != expected_kind) {
        schema_fail("$.kind", "expected '" + expected_kind + "', found '" + kind + "'");
    }
}

json marker_or_number(const std::optional<double>& value, const char* marker) {
    if (value) return *value;
    return marker;
}

std::optional<double> parse_marker_or_number(const json& value, const std::string& path,
                                             const char* marker) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string() && value.get<std::string>() == marker) return std::nullopt;
    schema_fail(path, std::string("expected a number or the marker '") + marker + "'");
}

json ids_json(const std::set<ElementId>& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(id);
    return out;
}

std::set<ElementId> parse_ids(const json& value, const std::string& path) {
    if (!value.is_array()) schema_fail(path, "expected an array of id strings");
    std::set<ElementId> out;
    for (const json& node : value) {
        if (!node.is_string()) schema_fail(path, "expected an array of id strings");
        out.insert(node.get<std::string>());
    }
    return out;
}

json coverage_json(const CoverageDetail& coverage) {
    return {{"subject", coverage.subject},
            {"required", ids_json(coverage.required)},
            {"adopted", ids_json(coverage.adopted)},
            {"missing", ids_json(coverage.missing)},
            {"ratio", coverage.ratio}};
}

CoverageDetail parse_coverage(const json& node, const std::string& path) {
    if (!node.is_object()) schema_fail(path, "expected a coverage object");
    CoverageDetail out;
    out.subject = require_string(node, path, "subject");
    out.required = parse_ids(require_key(node, path, "required"), path + ".required");
    out.adopted = parse_ids(require_key(node, path, "adopted"), path + ".adopted");
    out.missing = parse_ids(require_key(node, path, "missing"), path + ".missing");
    out.ratio = require_number(node, path, "ratio");
    return out;
}

json adequacy_body(const AdequacyReport& report) {
    json per_objective = json::object();
    for (const auto& [objective, entry] : report.per_objective) {
        json practice_coverage = json::array();
        for (const CoverageDetail& coverage : entry.practice_coverage) {
            practice_coverage.push_back(coverage_json(coverage));
        }
        per_objective[objective] = {{"score", entry.score},
                                    {"principle_coverage", coverage_json(entry.principle_coverage)},
                                    {"practice_coverage", std::move(practice_coverage)}};
    }
    json flags = json::array();
    for (const SuspectFlag& flag : report.suspect_flags) {
        flags.push_back(
            {{"code", flag.code}, {"subject", flag.subject}, {"context", flag.context}});
    }
    return {{"kind", "adequacy"},
            {"method", report.method},
            {"overall_score", report.overall_score},
            {"per_objective", std::move(per_objective)},
            {"suspect_flags", std::move(flags)}};
}

AdequacyReport parse_adequacy_body(const json& node, const std::string& path) {
    AdequacyReport out;
    out.method = require_string(node, path, "method");
    out.overall_score = require_number(node, path, "overall_score");

    const json& per_objective = require_key(node, path, "per_objective");
    if (!per_objective.is_object()) schema_fail(path + ".per_objective", "expected an object");
    for (const auto& item : per_objective.items()) {
        const std::string entry_path = path + ".per_objective." + item.key();
        const json& entry_node = item.value();
        if (!entry_node.is_object()) schema_fail(entry_path, "expected an object");
        ObjectiveAdequacy entry;
        entry.score = require_number(entry_node, entry_path, "score");
        entry.principle_coverage = parse_coverage(
            require_key(entry_node, entry_path, "principle_coverage"),
            entry_path + ".principle_coverage");
        const json& coverage_list = require_key(entry_node, entry_path, "practice_coverage");
        if (!coverage_list.is_array()) {
            schema_fail(entry_path + ".practice_coverage", "expected an array");
        }
        for (const json& coverage_node : coverage_list) {
            entry.practice_coverage.push_back(
                parse_coverage(coverage_node, entry_path + ".practice_coverage[]"));
        }
        out.per_objective.emplace(item.key(), std::move(entry));
    }

    const json& flags = require_key(node, path, "suspect_flags");
    if (!flags.is_array()) schema_fail(path + ".suspect_flags", "expected an array");
    for (const json& flag_node : flags) {
        const std::string flag_path = path + ".suspect_flags[]";
        if (!flag_node.is_object()) schema_fail(flag_path, "expected an object");
        out.suspect_flags.push_back({require_string(flag_node, flag_path, "code"),
                                     require_string(flag_node, flag_path, "subject"),
                                     require_string(flag_node, flag_path, "context")});
    }
    return out;
}

json attainment_detail_json(const AttainmentDetail& detail) {
    json contributing = json::array();
    for (const auto& [child, value] : detail.contributing) {
        contributing.push_back(json::array({child, value}));
    }
    return {{"subject", detail.subject},
            {"attainment", marker_or_number(detail.attainment, kUnassessed)},
            {"evidence_coverage", detail.evidence_coverage},
            {"observed_indicators", detail.observed_indicators},
            {"linked_indicators", detail.linked_indicators},
            {"contributing", std::move(contributing)}};
}

AttainmentDetail parse_attainment_detail(const json& node, const std::string& path) {
    if (!node.is_object()) schema_fail(path, "expected an object");
    AttainmentDetail out;
    out.subject = require_string(node, path, "subject");
    out.attainment = parse_marker_or_number(require_key(node, path, "attainment"),
                                            path + ".attainment", kUnassessed);
    out.evidence_coverage = require_number(node, path, "evidence_coverage");
    out.observed_indicators = require_int(node, path, "observed_indicators");
    out.linked_indicators = require_int(node, path, "linked_indicators");
    const json& contributing = require_key(node, path, "contributing");
    if (!contributing.is_array()) schema_fail(path + ".contributing", "expected an array");
    for (const json& pair : contributing) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_number()) {
            schema_fail(path + ".contributing", "expected [id, value] pairs");
        }
        out.contributing.emplace_back(pair[0].get<std::string>(), pair[1].get<double>());
    }
    return out;
}

json attainment_map_json(const std::map<ElementId, AttainmentDetail>& details) {
    json out = json::object();
    for (const auto& [id, detail] : details) out[id] = attainment_detail_json(detail);
    return out;
}

std::map<ElementId, AttainmentDetail> parse_attainment_map(const json& value,
                                                           const std::string& path) {
    if (!value.is_object()) schema_fail(path, "expected an object");
    std::map<ElementId, AttainmentDetail> out;
    for (const auto& item : value.items()) {
        out.emplace(item.key(), parse_attainment_detail(item.value(), path + "." + item.key()));
    }
    return out;
}

std::string dump_canonical(const json& value) {
    return value.dump(2) + "\n";
}

}  // namespace

std::string emit_adequacy_report(const AdequacyReport& report) {
    json root = adequacy_body(report);
    root["format_version"] = 1;
    return dump_canonical(root);
}

AdequacyReport parse_adequacy_report(const std::string& document) {
    const json root = parse_json(document);
    require_header(root, "adequacy");
    return parse_adequacy_body(root, "$");
}

std::string emit_attainment_report(const AttainmentReport& report) {
    json root = {
        {"format_version", 1},
        {"kind", to_token(report.kind)},
        {"method", report.method},
        {"organization", report.organization},
        {"overall", marker_or_number(report.overall, kUnassessed)},
        {"qualified", report.qualified},
        {"per_practice", attainment_map_json(report.per_practice)},
        {"per_principle", attainment_map_json(report.per_principle)},
        {"per_objective", attainment_map_json(report.per_objective)},
        {"adequacy_context", adequacy_body(report.adequacy_context)},
    };
    return dump_canonical(root);
}

AttainmentReport parse_attainment_report(const std::string& document) {
    const json root = parse_json(document);
    if (!root.is_object()) schema_fail("$", "expected an object");
    const json& version = require_key(root, "$", "format_version");
    if (!version.is_number_integer() || version.get<long long>() != 1) {
        schema_fail("$.format_version", "this reader understands format_version 1 only");
    }
    const std::string kind_token = require_string(root, "$", "kind");
    const auto kind = attainment_kind_from_token(kind_token);
    if (!kind) {
        schema_fail("$.kind", "expected 'capability' or 'effectiveness', found '" + kind_token +
                                  "'");
    }

    AttainmentReport out;
    out.kind = *kind;
    out.method = require_string(root, "$", "method");
    out.organization = require_string(root, "$", "organization");
    out.overall =
        parse_marker_or_number(require_key(root, "$", "overall"), "$.overall", kUnassessed);
    out.qualified = require_bool(root, "$", "qualified");
    out.per_practice = parse_attainment_map(require_key(root, "$", "per_practice"),
                                            "$.per_practice");
    out.per_principle = parse_attainment_map(require_key(root, "$", "per_principle"),
                                             "$.per_principle");
    out.per_objective = parse_attainment_map(require_key(root, "$", "per_objective"),
                                             "$.per_objective");
    const json& context = require_key(root, "$", "adequacy_context");
    if (!context.is_object()) schema_fail("$.adequacy_context", "expected an object");
    out.adequacy_context = parse_adequacy_body(context, "$.adequacy_context");
    return out;
}

std::string emit_comparison_table(const ComparisonTable& table) {
    json objectives = json::array();
    for (const ElementId& objective : table.objectives) objectives.push_back(objective);
    json rows = json::array();
    for (const ComparisonRow& row : table.rows) {
        json per_objective = json::object();
        for (const auto& [objective, score] : row.per_objective) {
            per_objective[objective] = marker_or_number(score, kNotClaimed);
        }
        rows.push_back({{"method", row.method},
                        {"overall_score", row.overall_score},
                        {"per_objective", std::move(per_objective)}});
    }
    json root = {
        {"format_version", 1},
        {"kind", "comparison"},
        {"framework", {{"name", table.framework.name}, {"version", table.framework.version}}},
        {"objectives", std::move(objectives)},
        {"rows", std::move(rows)},
    };
    return dump_canonical(root);
}

ComparisonTable parse_comparison_table(const std::string& document) {
    const json root = parse_json(document);
    require_header(root, "comparison");

    ComparisonTable out;
    const json& framework = require_key(root, "$", "framework");
    if (!framework.is_object()) schema_fail("$.framework", "expected an object");
    out.framework.name = require_string(framework, "$.framework", "name");
    out.framework.version = require_string(framework, "$.framework", "version");

    const json& objectives = require_key(root, "$", "objectives");
    if (!objectives.is_array()) schema_fail("$.objectives", "expected an array");
    for (const json& node : objectives) {
        if (!node.is_string()) schema_fail("$.objectives", "expected id strings");
        out.objectives.push_back(node.get<std::string>());
    }

    const json& rows = require_key(root, "$", "rows");
    if (!rows.is_array()) schema_fail("$.rows", "expected an array");
    for (const json& row_node : rows) {
        const std::string path = "$.rows[]";
        if (!row_node.is_object()) schema_fail(path, "expected an object");
        ComparisonRow row;
        row.method = require_string(row_node, path, "method");
        row.overall_score = require_number(row_node, path, "overall_score");
        const json& per_objective = require_key(row_node, path, "per_objective");
        if (!per_objective.is_object()) schema_fail(path + ".per_objective", "expected an object");
        for (const auto& item : per_objective.items()) {
            row.per_objective.emplace(
                item.key(), parse_marker_or_number(item.value(),
                                                   path + ".per_objective." + item.key(),
                                                   kNotClaimed));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string emit_validation_report(const ValidationReport& report) {
    json issues = json::array();
    for (const Issue& issue : report.issues) {
        json subject;
        if (issue.subject.is_link()) {
            subject = json::array({issue.subject.id, issue.subject.second});
        } else {
            subject = issue.subject.id;
        }
        issues.push_back({{"severity", to_token(issue.severity)},
                          {"code", issue.code},
                          {"message", issue.message},
                          {"subject", std::move(subject)}});
    }
    json root = {
        {"format_version", 1},
        {"kind", "validation"},
        {"valid", report.valid},
        {"issues", std::move(issues)},
    };
    return dump_canonical(root);
}

ValidationReport parse_validation_report(const std::string& document) {
    const json root = parse_json(document);
    require_header(root, "validation");

    ValidationReport out;
    out.valid = require_bool(root, "$", "valid");
    const json& issues = require_key(root, "$", "issues");
    if (!issues.is_array()) schema_fail("$.issues", "expected an array");
    for (const json& node : issues) {
        const std::string path = "$.issues[]";
        if (!node.is_object()) schema_fail(path, "expected an object");
        Issue issue;
        const std::string severity = require_string(node, path, "severity");
        if (severity == "error") {
            issue.severity = Severity::Error;
        } else if (severity == "warning") {
            issue.severity = Severity::Warning;
        } else {
            schema_fail(path + ".severity", "expected 'error' or 'warning'");
        }
        issue.code = require_string(node, path, "code");
        issue.message = require_string(node, path, "message");
        const json& subject = require_key(node, path, "subject");
        if (subject.is_string()) {
            issue.subject = {subject.get<std::string>(), ""};
        } else if (subject.is_array() && subject.size() == 2 && subject[0].is_string() &&
                   subject[1].is_string()) {
            issue.subject = {subject[0].get<std::string>(), subject[1].get<std::string>()};
        } else {
            schema_fail(path + ".subject", "expected an id or an [from, to] pair");
        }
        out.issues.push_back(std::move(issue));
    }
    return out;
}

}  // namespace oppa
