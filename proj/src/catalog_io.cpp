#include "oppa/catalog_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

#include <json.hpp>

#include "oppa/validate.hpp"

namespace oppa {

namespace {

using nlohmann::json;

struct LineCol {
    int line = 1;
    int column = 1;
};

LineCol line_col(const std::string& text, size_t byte_pos) {
    LineCol lc;
    for (size_t i = 0; i < byte_pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++lc.line;
            lc.column = 1;
        } else {
            ++lc.column;
        }
    }
    return lc;
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw ParseError("schema-error", path + ": " + what);
}

json parse_json(const std::string& document) {
    try {
        return json::parse(document);
    } catch (const json::parse_error& e) {
        const LineCol lc = line_col(document, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("syntax-error", e.what(), lc.line, lc.column);
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

void require_format_version(const json& obj, const std::string& path) {
    const json& value = require_key(obj, path, "format_version");
    if (!value.is_number_integer() || value.get<long long>() != 1) {
        schema_fail(path + ".format_version", "this reader understands format_version 1 only");
    }
}

const json& require_object(const json& value, const std::string& path) {
    if (!value.is_object()) schema_fail(path, "expected an object");
    return value;
}

const json& require_array(const json& value, const std::string& path) {
    if (!value.is_array()) schema_fail(path, "expected an array");
    return value;
}

/// Unknown top-level keys are schema errors; unknown nested keys only warn.
void check_keys(const json& obj, const std::string& path,
                std::initializer_list<std::string_view> allowed, bool unknown_is_error,
                std::vector<Issue>& warnings) {
    for (const auto& item : obj.items()) {
        const std::string& key = item.key();
        if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
        if (unknown_is_error) {
            schema_fail(path, "unknown key '" + key + "'");
        }
        warnings.push_back({Severity::Warning, "unknown-key",
                            path + ": ignored unknown key '" + key + "'", {key, ""}});
    }
}

void parse_common_fields(const json& node, const std::string& path, ElementId& id,
                         std::string& name, std::string& description, std::string& source) {
    require_object(node, path);
    id = require_string(node, path, "id");
    name = require_string(node, path, "name");
    description = require_string(node, path, "description");
    source = require_string(node, path, "source");
}

template <typename Element>
std::vector<Element> parse_elements(const json& value, const std::string& path,
                                    std::vector<Issue>& warnings) {
    require_array(value, path);
    std::vector<Element> out;
    size_t index = 0;
    for (const json& node : value) {
        const std::string item_path = path + "[" + std::to_string(index++) + "]";
        Element element;
        parse_common_fields(node, item_path, element.id, element.name, element.description,
                            element.source);
        if constexpr (std::is_same_v<Element, Indicator>) {
            const std::string token = require_string(node, item_path, "category");
            const auto category = category_from_token(token);
            if (!category) {
                schema_fail(item_path + ".category", "unknown category token '" + token + "'");
            }
            element.category = *category;
            check_keys(node, item_path, {"id", "name", "description", "source", "category"},
                       false, warnings);
        } else {
            check_keys(node, item_path, {"id", "name", "description", "source"}, false,
                       warnings);
        }
        out.push_back(std::move(element));
    }
    return out;
}

std::vector<LinkPair> parse_links(const json& value, const std::string& path) {
    require_array(value, path);
    std::vector<LinkPair> out;
    size_t index = 0;
    for (const json& node : value) {
        const std::string item_path = path + "[" + std::to_string(index++) + "]";
        if (!node.is_array() || node.size() != 2 || !node[0].is_string() ||
            !node[1].is_string()) {
            schema_fail(item_path, "expected a [from, to] pair of strings");
        }
        out.emplace_back(node[0].get<std::string>(), node[1].get<std::string>());
    }
    return out;
}

/// Lists of ids become sets; repeats are dropped with a warning.
std::set<ElementId> parse_id_set(const json& value, const std::string& path,
                                 std::vector<Issue>& warnings) {
    require_array(value, path);
    std::set<ElementId> out;
    for (const json& node : value) {
        if (!node.is_string()) schema_fail(path, "expected an array of id strings");
        const std::string id = node.get<std::string>();
        if (!out.insert(id).second) {
            warnings.push_back({Severity::Warning, "duplicate-entry",
                                path + ": id '" + id + "' listed more than once", {id, ""}});
        }
    }
    return out;
}

json element_json(const Objective& o) {
    return {{"id", o.id}, {"name", o.name}, {"description", o.description},
            {"source", o.source}};
}
json element_json(const Principle& p) {
    return {{"id", p.id}, {"name", p.name}, {"description", p.description},
            {"source", p.source}};
}
json element_json(const Practice& p) {
    return {{"id", p.id}, {"name", p.name}, {"description", p.description},
            {"source", p.source}};
}
json element_json(const Indicator& i) {
    return {{"id", i.id},
            {"name", i.name},
            {"category", to_token(i.category)},
            {"description", i.description},
            {"source", i.source}};
}

template <typename Element>
json elements_json(const std::vector<Element>& elements) {
    json out = json::array();
    for (const auto& element : elements) out.push_back(element_json(element));
    return out;
}

json links_json(const std::vector<LinkPair>& links) {
    json out = json::array();
    for (const auto& [from, to] : links) out.push_back(json::array({from, to}));
    return out;
}

json ids_json(const std::set<ElementId>& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(id);
    return out;
}

std::string dump_canonical(const json& value) {
    return value.dump(2) + "\n";
}

}  // namespace

Parsed<ReferenceFramework> parse_catalog_unchecked(const std::string& document) {
    const json root = parse_json(document);
    require_object(root, "$");

    Parsed<ReferenceFramework> out;
    std::vector<Issue>& warnings = out.warnings;
    check_keys(root, "$",
               {"format_version", "metadata", "objectives", "principles", "practices",
                "indicators", "op_links", "pp_links", "pi_links"},
               true, warnings);
    require_format_version(root, "$");

    const json& metadata = require_object(require_key(root, "$", "metadata"), "$.metadata");
    out.value.metadata.name = require_string(metadata, "$.metadata", "name");
    out.value.metadata.version = require_string(metadata, "$.metadata", "version");
    check_keys(metadata, "$.metadata", {"name", "version"}, false, warnings);

    out.value.objectives =
        parse_elements<Objective>(require_key(root, "$", "objectives"), "$.objectives", warnings);
    out.value.principles =
        parse_elements<Principle>(require_key(root, "$", "principles"), "$.principles", warnings);
    out.value.practices =
        parse_elements<Practice>(require_key(root, "$", "practices"), "$.practices", warnings);
    out.value.indicators =
        parse_elements<Indicator>(require_key(root, "$", "indicators"), "$.indicators", warnings);
    out.value.op_links = parse_links(require_key(root, "$", "op_links"), "$.op_links");
    out.value.pp_links = parse_links(require_key(root, "$", "pp_links"), "$.pp_links");
    out.value.pi_links = parse_links(require_key(root, "$", "pi_links"), "$.pi_links");
    return out;
}

Parsed<ReferenceFramework> parse_catalog(const std::string& document) {
    Parsed<ReferenceFramework> out = parse_catalog_unchecked(document);
    ValidationReport report = validate_framework(out.value);
    if (!report.valid) {
        throw SemanticError("catalog document fails framework validation", std::move(report));
    }
    return out;
}

std::string emit_catalog(const ReferenceFramework& framework) {
    if (!validate_framework(framework).valid) {
        throw Error("framework-invalid", "refusing to emit an invalid framework");
    }
    const ReferenceFramework canon = framework.canonicalized();
    json root = {
        {"format_version", 1},
        {"metadata", {{"name", canon.metadata.name}, {"version", canon.metadata.version}}},
        {"objectives", elements_json(canon.objectives)},
        {"principles", elements_json(canon.principles)},
        {"practices", elements_json(canon.practices)},
        {"indicators", elements_json(canon.indicators)},
        {"op_links", links_json(canon.op_links)},
        {"pp_links", links_json(canon.pp_links)},
        {"pi_links", links_json(canon.pi_links)},
    };
    return dump_canonical(root);
}

Parsed<MethodDefinition> parse_method(const std::string& document) {
    const json root = parse_json(document);
    require_object(root, "$");

    Parsed<MethodDefinition> out;
    check_keys(root, "$",
               {"format_version", "id", "name", "objectives", "principles", "practices",
                "notes"},
               true, out.warnings);
    require_format_version(root, "$");
    out.value.id = require_string(root, "$", "id");
    out.value.name = require_string(root, "$", "name");
    out.value.objectives =
        parse_id_set(require_key(root, "$", "objectives"), "$.objectives", out.warnings);
    out.value.principles =
        parse_id_set(require_key(root, "$", "principles"), "$.principles", out.warnings);
    out.value.practices =
        parse_id_set(require_key(root, "$", "practices"), "$.practices", out.warnings);
    out.value.notes = require_string(root, "$", "notes");
    return out;
}

std::string emit_method(const MethodDefinition& method) {
    json root = {
        {"format_version", 1},
        {"id", method.id},
        {"name", method.name},
        {"objectives", ids_json(method.objectives)},
        {"principles", ids_json(method.principles)},
        {"practices", ids_json(method.practices)},
        {"notes", method.notes},
    };
    return dump_canonical(root);
}

Parsed<ObservationSet> parse_observations(const std::string& document) {
    const json root = parse_json(document);
    require_object(root, "$");

    Parsed<ObservationSet> out;
    check_keys(root, "$", {"format_version", "organization", "method", "observations"}, true,
               out.warnings);
    require_format_version(root, "$");
    out.value.organization = require_string(root, "$", "organization");
    out.value.method = require_string(root, "$", "method");

    const json& list = require_array(require_key(root, "$", "observations"), "$.observations");
    size_t index = 0;
    for (const json& node : list) {
        const std::string path = "$.observations[" + std::to_string(index++) + "]";
        require_object(node, path);
        check_keys(node, path, {"indicator", "level", "evidence", "observed_on"}, false,
                   out.warnings);
        IndicatorObservation obs;
        obs.indicator = require_string(node, path, "indicator");
        const std::string level_token = require_string(node, path, "level");
        const auto level = level_from_token(level_token);
        if (!level) {
            schema_fail(path + ".level",
                        "unknown level token '" + level_token +
                            "' (expected absent|initial|partial|substantial|full)");
        }
        obs.level = *level;
        obs.evidence = require_string(node, path, "evidence");
        const std::string date_token = require_string(node, path, "observed_on");
        const auto date = Date::parse(date_token);
        if (!date) {
            schema_fail(path + ".observed_on",
                        "'" + date_token + "' is not a valid ISO-8601 calendar date");
        }
        obs.observed_on = *date;
        out.value.observations.push_back(std::move(obs));
    }
    return out;
}

std::string emit_observations(const ObservationSet& observations) {
    const ObservationSet canon = observations.canonicalized();
    json list = json::array();
    for (const auto& obs : canon.observations) {
        list.push_back({{"indicator", obs.indicator},
                        {"level", to_token(obs.level)},
                        {"evidence", obs.evidence},
                        {"observed_on", obs.observed_on.to_string()}});
    }
    json root = {
        {"format_version", 1},
        {"organization", canon.organization},
        {"method", canon.method},
        {"observations", std::move(list)},
    };
    return dump_canonical(root);
}

}  // namespace oppa
