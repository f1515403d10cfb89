#include "oppa/assessment.hpp"

#include <algorithm>
#include <deque>

#include "oppa/errors.hpp"
#include "oppa/validate.hpp"

namespace oppa {

namespace {

using IdSet = std::set<ElementId>;
using Adjacency = std::map<ElementId, IdSet>;

Adjacency forward_of(const std::vector<LinkPair>& links) {
    Adjacency out;
    for (const auto& [from, to] : links) out[from].insert(to);
    return out;
}

const IdSet& children_of(const Adjacency& adjacency, const ElementId& id) {
    static const IdSet empty;
    auto it = adjacency.find(id);
    return it == adjacency.end() ? empty : it->second;
}

IdSet intersect(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

IdSet subtract(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

void require_valid_framework(const ReferenceFramework& framework) {
    if (!validate_framework(framework).valid) {
        throw Error("framework-invalid",
                    "framework fails validation; run validate_framework for details");
    }
}

void require_valid_method(const ReferenceFramework& framework, const MethodDefinition& method) {
    if (validate_method(framework, method).has_errors()) {
        throw Error("method-invalid", "method '" + method.id +
                                          "' fails validation against the framework");
    }
}

/// Mean over values summed in the caller's (ascending id) order.
double mean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

std::string to_token(AttainmentKind kind) {
    return kind == AttainmentKind::Capability ? "capability" : "effectiveness";
}

std::optional<AttainmentKind> attainment_kind_from_token(const std::string& token) {
    if (token == "capability") return AttainmentKind::Capability;
    if (token == "effectiveness") return AttainmentKind::Effectiveness;
    return std::nullopt;
}

AdequacyReport assess_adequacy(const ReferenceFramework& framework,
                               const MethodDefinition& method) {
    require_valid_framework(framework);
    require_valid_method(framework, method);

    const Adjacency principles_of_objective = forward_of(framework.op_links);
    const Adjacency practices_of_principle = forward_of(framework.pp_links);

    AdequacyReport report;
    report.method = method.id;

    std::vector<double> objective_scores;
    for (const ElementId& objective : method.objectives) {
        const IdSet& required = children_of(principles_of_objective, objective);
        ObjectiveAdequacy entry;
        entry.principle_coverage.subject = objective;
        entry.principle_coverage.required = required;
        entry.principle_coverage.adopted = intersect(required, method.principles);
        entry.principle_coverage.missing = subtract(required, entry.principle_coverage.adopted);
        entry.principle_coverage.ratio =
            static_cast<double>(entry.principle_coverage.adopted.size()) /
            static_cast<double>(required.size());

        for (const ElementId& missing : entry.principle_coverage.missing) {
            report.suspect_flags.push_back({"missing-principle", missing, objective});
        }

        std::vector<double> practice_ratios;
        for (const ElementId& principle : entry.principle_coverage.adopted) {
            const IdSet& linked = children_of(practices_of_principle, principle);
            CoverageDetail coverage;
            coverage.subject = principle;
            coverage.required = linked;
            coverage.adopted = intersect(linked, method.practices);
            coverage.missing = subtract(linked, coverage.adopted);
            coverage.ratio = static_cast<double>(coverage.adopted.size()) /
                             static_cast<double>(linked.size());
            if (coverage.adopted.empty()) {
                report.suspect_flags.push_back({"unrealized-principle", principle, objective});
            }
            practice_ratios.push_back(coverage.ratio);
            entry.practice_coverage.push_back(std::move(coverage));
        }

        // principle_ratio * mean(practice_ratios), folded into one division
        // so the score cannot dip by an ulp when an element is added.
        double ratio_sum = 0.0;
        for (double ratio : practice_ratios) ratio_sum += ratio;
        entry.score = ratio_sum / static_cast<double>(required.size());
        objective_scores.push_back(entry.score);
        report.per_objective.emplace(objective, std::move(entry));
    }

    report.overall_score = mean(objective_scores);
    std::sort(report.suspect_flags.begin(), report.suspect_flags.end());
    return report;
}

namespace {

AttainmentReport assess_bottom_up(AttainmentKind kind, const ReferenceFramework& framework,
                                  const MethodDefinition& method,
                                  const ObservationSet& observations,
                                  const AdequacyReport* adequacy) {
    if (adequacy == nullptr) {
        throw Error("adequacy-missing",
                    "adequacy must be assessed before " + to_token(kind) +
                        "; supply the adequacy report");
    }
    require_valid_framework(framework);
    require_valid_method(framework, method);
    if (validate_observations(framework, observations).has_errors()) {
        throw Error("observations-invalid",
                    "observation set fails validation against the framework");
    }
    if (adequacy->method != method.id) {
        throw Error("mismatched-method", "adequacy report is for '" + adequacy->method +
                                             "', not '" + method.id + "'");
    }
    if (observations.method != method.id) {
        throw Error("mismatched-method", "observation set is for '" + observations.method +
                                             "', not '" + method.id + "'");
    }

    const bool capability = kind == AttainmentKind::Capability;
    std::map<ElementId, IndicatorCategory> category_of;
    for (const Indicator& indicator : framework.indicators) {
        category_of.emplace(indicator.id, indicator.category);
    }
    const auto in_filter = [&](const ElementId& id) {
        const IndicatorCategory category = category_of.at(id);
        return capability ? is_capability_category(category)
                          : is_effectiveness_category(category);
    };

    // Out-of-filter observations are ignored, not rejected; one observation
    // file can serve both assessments.
    std::map<ElementId, double> observed_level;
    for (const IndicatorObservation& obs : observations.observations) {
        if (in_filter(obs.indicator)) observed_level.emplace(obs.indicator, level_value(obs.level));
    }

    const Adjacency indicators_of_practice = forward_of(framework.pi_links);
    const Adjacency practices_of_principle = forward_of(framework.pp_links);
    const Adjacency principles_of_objective = forward_of(framework.op_links);

    AttainmentReport report;
    report.kind = kind;
    report.method = method.id;
    report.organization = observations.organization;
    report.adequacy_context = *adequacy;
    report.qualified = !adequacy->suspect_flags.empty();

    // Indicator pool of each practice, restricted to the active categories.
    std::map<ElementId, IdSet> pool_of_practice;

    for (const ElementId& practice : method.practices) {
        IdSet pool;
        for (const ElementId& indicator : children_of(indicators_of_practice, practice)) {
            if (in_filter(indicator)) pool.insert(indicator);
        }

        AttainmentDetail detail;
        detail.subject = practice;
        detail.linked_indicators = static_cast<int>(pool.size());
        std::vector<double> levels;
        for (const ElementId& indicator : pool) {
            auto it = observed_level.find(indicator);
            if (it == observed_level.end()) continue;
            levels.push_back(it->second);
            detail.contributing.emplace_back(indicator, it->second);
        }
        detail.observed_indicators = static_cast<int>(levels.size());
        if (!levels.empty()) detail.attainment = mean(levels);
        detail.evidence_coverage =
            pool.empty() ? 0.0
                         : static_cast<double>(detail.observed_indicators) /
                               static_cast<double>(pool.size());
        pool_of_practice.emplace(practice, std::move(pool));
        report.per_practice.emplace(practice, std::move(detail));
    }

    // Attainment propagates upward over assessed children only; an element
    // with no assessed child stays unassessed instead of scoring 0.
    const auto roll_up = [&](const ElementId& subject, const IdSet& children,
                             const std::map<ElementId, AttainmentDetail>& lower,
                             const std::map<ElementId, IdSet>& pools) {
        AttainmentDetail detail;
        detail.subject = subject;
        IdSet pool;
        IdSet observed;
        std::vector<double> values;
        for (const ElementId& child : children) {
            const AttainmentDetail& below = lower.at(child);
            if (below.attainment) {
                values.push_back(*below.attainment);
                detail.contributing.emplace_back(child, *below.attainment);
            }
            const IdSet& child_pool = pools.at(child);
            pool.insert(child_pool.begin(), child_pool.end());
        }
        for (const ElementId& indicator : pool) {
            if (observed_level.count(indicator)) observed.insert(indicator);
        }
        detail.linked_indicators = static_cast<int>(pool.size());
        detail.observed_indicators = static_cast<int>(observed.size());
        detail.evidence_coverage = pool.empty() ? 0.0
                                                : static_cast<double>(observed.size()) /
                                                      static_cast<double>(pool.size());
        if (!values.empty()) detail.attainment = mean(values);
        return std::make_pair(std::move(detail), std::move(pool));
    };

    std::map<ElementId, IdSet> pool_of_principle;
    for (const ElementId& principle : method.principles) {
        const IdSet adopted =
            intersect(children_of(practices_of_principle, principle), method.practices);
        auto [detail, pool] =
            roll_up(principle, adopted, report.per_practice, pool_of_practice);
        pool_of_principle.emplace(principle, std::move(pool));
        report.per_principle.emplace(principle, std::move(detail));
    }

    std::map<ElementId, IdSet> pool_of_objective;
    std::vector<double> objective_values;
    for (const ElementId& objective : method.objectives) {
        const IdSet adopted =
            intersect(children_of(principles_of_objective, objective), method.principles);
        auto [detail, pool] =
            roll_up(objective, adopted, report.per_principle, pool_of_principle);
        if (detail.attainment) objective_values.push_back(*detail.attainment);
        pool_of_objective.emplace(objective, std::move(pool));
        report.per_objective.emplace(objective, std::move(detail));
    }

    if (!objective_values.empty()) report.overall = mean(objective_values);
    return report;
}

}  // namespace

AttainmentReport assess_capability(const ReferenceFramework& framework,
                                   const MethodDefinition& method,
                                   const ObservationSet& observations,
                                   const AdequacyReport* adequacy) {
    return assess_bottom_up(AttainmentKind::Capability, framework, method, observations,
                            adequacy);
}

AttainmentReport assess_effectiveness(const ReferenceFramework& framework,
                                      const MethodDefinition& method,
                                      const ObservationSet& observations,
                                      const AdequacyReport* adequacy) {
    return assess_bottom_up(AttainmentKind::Effectiveness, framework, method, observations,
                            adequacy);
}

ComparisonTable compare_adequacy(const ReferenceFramework& framework,
                                 const std::vector<MethodDefinition>& methods) {
    if (methods.empty()) {
        throw Error("method-invalid", "compare requires at least one method");
    }
    require_valid_framework(framework);
    for (const MethodDefinition& method : methods) {
        if (validate_method(framework, method).has_errors()) {
            throw Error("method-invalid", "method '" + method.id +
                                              "' fails validation against the framework");
        }
    }

    ComparisonTable table;
    table.framework = framework.metadata;

    IdSet all_objectives;
    for (const MethodDefinition& method : methods) {
        all_objectives.insert(method.objectives.begin(), method.objectives.end());
    }
    table.objectives.assign(all_objectives.begin(), all_objectives.end());

    for (const MethodDefinition& method : methods) {
        const AdequacyReport adequacy = assess_adequacy(framework, method);
        ComparisonRow row;
        row.method = method.id;
        row.overall_score = adequacy.overall_score;
        for (const ElementId& objective : table.objectives) {
            auto it = adequacy.per_objective.find(objective);
            row.per_objective.emplace(
                objective, it == adequacy.per_objective.end()
                               ? std::optional<double>{}
                               : std::optional<double>{it->second.score});
        }
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ComparisonRow& a, const ComparisonRow& b) { return a.method < b.method; });
    return table;
}

std::set<ElementId> reachability(const ReferenceFramework& framework, Direction direction,
                                 const ElementId& start) {
    require_valid_framework(framework);

    bool known = false;
    for (const Objective& e : framework.objectives) known = known || e.id == start;
    for (const Principle& e : framework.principles) known = known || e.id == start;
    for (const Practice& e : framework.practices) known = known || e.id == start;
    for (const Indicator& e : framework.indicators) known = known || e.id == start;
    if (!known) {
        throw Error("unknown-element", "no element '" + start + "' in the framework");
    }

    Adjacency adjacency;
    const bool top_down = direction == Direction::TopDown;
    for (const auto* links : {&framework.op_links, &framework.pp_links, &framework.pi_links}) {
        for (const auto& [from, to] : *links) {
            if (top_down) {
                adjacency[from].insert(to);
            } else {
                adjacency[to].insert(from);
            }
        }
    }

    std::set<ElementId> visited;
    std::deque<ElementId> frontier{start};
    while (!frontier.empty()) {
        const ElementId current = frontier.front();
        frontier.pop_front();
        for (const ElementId& next : children_of(adjacency, current)) {
            if (visited.insert(next).second) frontier.push_back(next);
        }
    }
    visited.erase(start);
    return visited;
}

}  // namespace oppa
