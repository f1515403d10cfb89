#include "oppa/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "oppa/errors.hpp"

namespace oppa {

namespace {

void add_issue(ValidationReport& report, Severity severity, std::string code,
               std::string message, IssueSubject subject) {
    report.issues.push_back(
        {severity, std::move(code), std::move(message), std::move(subject)});
}

template <typename Element>
void check_elements(ValidationReport& report, const std::vector<Element>& elements,
                    const std::string& kind) {
    std::map<ElementId, int> counts;
    std::set<ElementId> unnamed;
    for (const auto& element : elements) {
        ++counts[element.id];
        if (element.name.empty()) unnamed.insert(element.id);
    }
    for (const auto& [id, count] : counts) {
        if (!is_valid_element_id(id)) {
            add_issue(report, Severity::Error, "bad-id",
                      kind + " id is not a lowercase [a-z0-9-] token of at most 64 chars",
                      {id, ""});
        }
        if (count > 1) {
            add_issue(report, Severity::Error, "duplicate-id",
                      kind + " id appears " + std::to_string(count) + " times", {id, ""});
        }
        if (unnamed.count(id)) {
            add_issue(report, Severity::Error, "empty-name", kind + " has an empty name",
                      {id, ""});
        }
    }
}

struct LinkUsage {
    std::set<ElementId> with_outgoing;
    std::set<ElementId> with_incoming;
};

LinkUsage check_links(ValidationReport& report, const std::vector<LinkPair>& links,
                      const std::string& link_kind, const std::set<ElementId>& from_ids,
                      const std::set<ElementId>& to_ids, const std::string& from_kind,
                      const std::string& to_kind) {
    LinkUsage usage;
    std::map<LinkPair, int> counts;
    for (const auto& link : links) ++counts[link];
    for (const auto& [link, count] : counts) {
        usage.with_outgoing.insert(link.first);
        usage.with_incoming.insert(link.second);
        if (count > 1) {
            add_issue(report, Severity::Error, "duplicate-link",
                      link_kind + " pair appears " + std::to_string(count) + " times",
                      {link.first, link.second});
        }
        const bool from_ok = from_ids.count(link.first) > 0;
        const bool to_ok = to_ids.count(link.second) > 0;
        if (!from_ok || !to_ok) {
            std::string missing = !from_ok ? "no " + from_kind + " '" + link.first + "'"
                                           : "no " + to_kind + " '" + link.second + "'";
            add_issue(report, Severity::Error, "dangling-link",
                      link_kind + " references " + missing, {link.first, link.second});
        }
    }
    return usage;
}

template <typename Element>
std::set<ElementId> id_set(const std::vector<Element>& elements) {
    std::set<ElementId> ids;
    for (const auto& element : elements) ids.insert(element.id);
    return ids;
}

void require_valid_framework(const ReferenceFramework& framework) {
    if (!validate_framework(framework).valid) {
        throw Error("framework-invalid",
                    "framework fails validation; run validate_framework for details");
    }
}

}  // namespace

ValidationReport validate_framework(const ReferenceFramework& framework) {
    ValidationReport report;

    check_elements(report, framework.objectives, "objective");
    check_elements(report, framework.principles, "principle");
    check_elements(report, framework.practices, "practice");
    check_elements(report, framework.indicators, "indicator");

    const auto objective_ids = id_set(framework.objectives);
    const auto principle_ids = id_set(framework.principles);
    const auto practice_ids = id_set(framework.practices);
    const auto indicator_ids = id_set(framework.indicators);

    const LinkUsage op = check_links(report, framework.op_links, "op_link", objective_ids,
                                     principle_ids, "objective", "principle");
    const LinkUsage pp = check_links(report, framework.pp_links, "pp_link", principle_ids,
                                     practice_ids, "principle", "practice");
    const LinkUsage pi = check_links(report, framework.pi_links, "pi_link", practice_ids,
                                     indicator_ids, "practice", "indicator");

    for (const auto& id : objective_ids) {
        if (!op.with_outgoing.count(id)) {
            add_issue(report, Severity::Error, "orphan-objective",
                      "objective links to no principle", {id, ""});
        }
    }
    for (const auto& id : principle_ids) {
        const bool no_in = !op.with_incoming.count(id);
        const bool no_out = !pp.with_outgoing.count(id);
        if (no_in || no_out) {
            std::string what = no_in && no_out ? "has no objective and links to no practice"
                               : no_in         ? "is linked from no objective"
                                               : "links to no practice";
            add_issue(report, Severity::Error, "orphan-principle", "principle " + what,
                      {id, ""});
        }
    }
    for (const auto& id : practice_ids) {
        if (!pp.with_incoming.count(id)) {
            add_issue(report, Severity::Error, "orphan-practice",
                      "practice is linked from no principle", {id, ""});
        }
    }
    for (const auto& id : indicator_ids) {
        if (!pi.with_incoming.count(id)) {
            add_issue(report, Severity::Error, "orphan-indicator",
                      "indicator is linked from no practice", {id, ""});
        }
    }

    finalize_report(report);
    return report;
}

ValidationReport validate_method(const ReferenceFramework& framework,
                                 const MethodDefinition& method) {
    require_valid_framework(framework);

    ValidationReport report;

    if (!is_valid_element_id(method.id)) {
        add_issue(report, Severity::Error, "bad-id",
                  "method id is not a lowercase [a-z0-9-] token of at most 64 chars",
                  {method.id, ""});
    }
    if (method.objectives.empty()) {
        add_issue(report, Severity::Error, "empty-objectives",
                  "method adopts no objectives; assessment is relative to objectives",
                  {method.id, ""});
    }

    const auto objective_ids = id_set(framework.objectives);
    const auto principle_ids = id_set(framework.principles);
    const auto practice_ids = id_set(framework.practices);

    for (const auto& id : method.objectives) {
        if (!objective_ids.count(id)) {
            add_issue(report, Severity::Error, "unknown-objective",
                      "adopted objective not in framework", {id, ""});
        }
    }
    for (const auto& id : method.principles) {
        if (!principle_ids.count(id)) {
            add_issue(report, Severity::Error, "unknown-principle",
                      "adopted principle not in framework", {id, ""});
        }
    }
    for (const auto& id : method.practices) {
        if (!practice_ids.count(id)) {
            add_issue(report, Severity::Error, "unknown-practice",
                      "adopted practice not in framework", {id, ""});
        }
    }

    // Adopted elements that cannot contribute to any adopted objective's
    // score are flagged, not rejected.
    std::map<ElementId, std::set<ElementId>> objectives_of_principle;
    for (const auto& [obj, pri] : framework.op_links) objectives_of_principle[pri].insert(obj);
    std::map<ElementId, std::set<ElementId>> principles_of_practice;
    for (const auto& [pri, pra] : framework.pp_links) principles_of_practice[pra].insert(pri);

    for (const auto& id : method.principles) {
        if (!principle_ids.count(id)) continue;
        const auto& parents = objectives_of_principle[id];
        const bool supported = std::any_of(parents.begin(), parents.end(), [&](const auto& o) {
            return method.objectives.count(o) > 0;
        });
        if (!supported) {
            add_issue(report, Severity::Warning, "unsupported-principle",
                      "no adopted objective links to this principle", {id, ""});
        }
    }
    for (const auto& id : method.practices) {
        if (!practice_ids.count(id)) continue;
        const auto& parents = principles_of_practice[id];
        const bool supported = std::any_of(parents.begin(), parents.end(), [&](const auto& q) {
            return method.principles.count(q) > 0;
        });
        if (!supported) {
            add_issue(report, Severity::Warning, "unsupported-practice",
                      "no adopted principle links to this practice", {id, ""});
        }
    }

    finalize_report(report);
    return report;
}

ValidationReport validate_observations(const ReferenceFramework& framework,
                                       const ObservationSet& observations,
                                       const MethodDefinition* method) {
    require_valid_framework(framework);

    ValidationReport report;
    const auto indicator_ids = id_set(framework.indicators);

    std::map<ElementId, int> counts;
    for (const auto& obs : observations.observations) ++counts[obs.indicator];

    for (const auto& [id, count] : counts) {
        if (!indicator_ids.count(id)) {
            add_issue(report, Severity::Error, "unknown-indicator",
                      "observed indicator not in framework", {id, ""});
        }
        if (count > 1) {
            add_issue(report, Severity::Error, "duplicate-observation",
                      "indicator observed " + std::to_string(count) +
                          " times; duplicates are rejected, not merged",
                      {id, ""});
        }
    }

    if (method != nullptr) {
        std::map<ElementId, std::set<ElementId>> practices_of_indicator;
        for (const auto& [pra, ind] : framework.pi_links) practices_of_indicator[ind].insert(pra);
        for (const auto& [id, count] : counts) {
            if (!indicator_ids.count(id)) continue;
            const auto& parents = practices_of_indicator[id];
            const bool linked = std::any_of(parents.begin(), parents.end(), [&](const auto& r) {
                return method->practices.count(r) > 0;
            });
            if (!linked) {
                add_issue(report, Severity::Warning, "unlinked-observation",
                          "observed indicator links to no practice adopted by method '" +
                              method->id + "'",
                          {id, ""});
            }
        }
    }

    finalize_report(report);
    return report;
}

}  // namespace oppa
