// Acceptance suite for the assessment engine and CLI. Each criterion
// prints exactly one PASS/FAIL line; the process exits with the number of
// failed criteria. Tolerances are written into the checks themselves:
// score identities are exact (==), set comparisons demand zero mismatches,
// and the timed criteria carry their budgets inline.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oppa/assessment.hpp"
#include "oppa/builtin.hpp"
#include "oppa/catalog_io.hpp"
#include "oppa/errors.hpp"
#include "oppa/render.hpp"
#include "oppa/report_io.hpp"
#include "oppa/validate.hpp"
#include "support/generators.hpp"
#include "support/subprocess.hpp"

using namespace oppa;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MethodDefinition adopt_everything(const ReferenceFramework& fw) {
    MethodDefinition m;
    m.id = "everything";
    m.name = "Adopts the whole catalog";
    for (const auto& o : fw.objectives) m.objectives.insert(o.id);
    for (const auto& p : fw.principles) m.principles.insert(p.id);
    for (const auto& p : fw.practices) m.practices.insert(p.id);
    return m;
}

// 1. The built-in catalog reproduces the flexibility chain and reachability
// walks it both ways in under a second.
Outcome flexibility_chain() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    const ReferenceFramework fw = builtin_reference();
    std::set<ElementId> under;
    for (const auto& [from, to] : fw.pp_links) {
        if (from == "accommodate-change") under.insert(to);
    }
    if (under !=
        std::set<ElementId>{"face-to-face-communication", "on-site-customer", "no-bruf"}) {
        outcome.fail("accommodate-change practices differ from the reference chain");
    }

    bool op_present = false;
    for (const auto& [from, to] : fw.op_links) {
        op_present = op_present || (from == "flexible" && to == "accommodate-change");
    }
    if (!op_present) outcome.fail("missing flexible -> accommodate-change link");

    const std::set<ElementId> down = reachability(fw, Direction::TopDown, "flexible");
    for (const char* id : {"accommodate-change", "face-to-face-communication",
                           "on-site-customer", "no-bruf"}) {
        if (!down.count(id)) outcome.fail(std::string("top-down misses ") + id);
    }
    const std::set<ElementId> up = reachability(fw, Direction::BottomUp, "no-bruf");
    if (!up.count("flexible")) outcome.fail("bottom-up from no-bruf misses flexible");

    if (seconds_since(start) >= 1.0) outcome.fail("exceeded 1 s budget");
    return outcome;
}

// 2. Over 200 random frameworks, engine reachability equals a brute-force
// closure oracle and bottom-up is exactly the transpose of top-down.
Outcome transpose_duality() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    testgen::Rng rng(1001);
    int mismatches = 0;

    for (int round = 0; round < 200; ++round) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        std::vector<ElementId> ids;
        for (const auto& e : fw.objectives) ids.push_back(e.id);
        for (const auto& e : fw.principles) ids.push_back(e.id);
        for (const auto& e : fw.practices) ids.push_back(e.id);
        for (const auto& e : fw.indicators) ids.push_back(e.id);

        std::map<ElementId, std::set<ElementId>> down, up;
        for (const ElementId& id : ids) {
            down[id] = reachability(fw, Direction::TopDown, id);
            up[id] = reachability(fw, Direction::BottomUp, id);
            if (down[id] != testgen::closure_oracle(fw, true, id)) ++mismatches;
            if (up[id] != testgen::closure_oracle(fw, false, id)) ++mismatches;
        }
        for (const ElementId& x : ids) {
            for (const ElementId& y : ids) {
                if (down[x].count(y) != up[y].count(x)) ++mismatches;
            }
        }
    }

    if (mismatches != 0) {
        outcome.fail(std::to_string(mismatches) + " reachability mismatches");
    }
    if (seconds_since(start) >= 30.0) outcome.fail("exceeded 30 s budget");
    return outcome;
}

// 3. A method adopting every element of any valid framework scores 1.0
// exactly, with no suspect flags.
Outcome full_adoption_identity() {
    Outcome outcome;
    testgen::Rng rng(1002);
    for (int round = 0; round < 100; ++round) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        const AdequacyReport report = assess_adequacy(fw, adopt_everything(fw));
        if (report.overall_score != 1.0) outcome.fail("overall score not exactly 1.0");
        for (const auto& [objective, entry] : report.per_objective) {
            if (entry.score != 1.0) outcome.fail("objective " + objective + " not 1.0");
        }
        if (!report.suspect_flags.empty()) outcome.fail("unexpected suspect flags");
    }
    return outcome;
}

// 4. Suspect flags equal the brute-force set differences on 200 random
// framework/method pairs.
Outcome suspect_flag_soundness() {
    Outcome outcome;
    testgen::Rng rng(1003);
    int mismatches = 0;
    for (int round = 0; round < 200; ++round) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        const MethodDefinition m = testgen::random_method(rng, fw);
        const AdequacyReport report = assess_adequacy(fw, m);

        std::set<std::tuple<std::string, ElementId, ElementId>> engine;
        for (const SuspectFlag& flag : report.suspect_flags) {
            engine.emplace(flag.code, flag.subject, flag.context);
        }
        if (engine.size() != report.suspect_flags.size()) ++mismatches;  // duplicates
        if (engine != testgen::flags_oracle(fw, m)) ++mismatches;
    }
    if (mismatches != 0) outcome.fail(std::to_string(mismatches) + " flag set mismatches");
    return outcome;
}

// 5. Adding one linked practice or one required principle to a method never
// lowers any per-objective adequacy score. 500 additions, exact comparison.
Outcome adequacy_monotonicity() {
    Outcome outcome;
    testgen::Rng rng(1004);
    int violations = 0;
    int additions = 0;

    while (additions < 500) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        MethodDefinition m = testgen::random_method(rng, fw);

        // Candidates that the framework actually ties to the method's view:
        // practices linked from any principle, principles linked from any
        // adopted objective.
        std::vector<ElementId> practice_candidates;
        for (const auto& p : fw.practices) {
            if (!m.practices.count(p.id)) practice_candidates.push_back(p.id);
        }
        std::vector<ElementId> principle_candidates;
        for (const auto& [from, to] : fw.op_links) {
            if (m.objectives.count(from) && !m.principles.count(to)) {
                principle_candidates.push_back(to);
            }
        }

        const AdequacyReport before = assess_adequacy(fw, m);

        MethodDefinition grown = m;
        const bool add_practice =
            !practice_candidates.empty() &&
            (principle_candidates.empty() || testgen::chance(rng, 0.5));
        if (add_practice) {
            grown.practices.insert(testgen::pick_one(rng, practice_candidates));
        } else if (!principle_candidates.empty()) {
            grown.principles.insert(testgen::pick_one(rng, principle_candidates));
        } else {
            continue;
        }
        ++additions;

        const AdequacyReport after = assess_adequacy(fw, grown);
        for (const auto& [objective, entry] : before.per_objective) {
            if (after.per_objective.at(objective).score < entry.score) ++violations;
        }
        if (after.overall_score < before.overall_score) ++violations;
    }

    if (violations != 0) outcome.fail(std::to_string(violations) + " score decreases");
    return outcome;
}

// 6. Capability output is bit-identical when effectiveness-category
// observations are removed, and vice versa. 100 random observation sets.
Outcome category_separation() {
    Outcome outcome;
    testgen::Rng rng(1005);
    for (int round = 0; round < 100; ++round) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        const MethodDefinition m = testgen::random_method(rng, fw);
        const ObservationSet obs = testgen::random_observations(rng, fw, m.id, 0.7);
        const AdequacyReport adequacy = assess_adequacy(fw, m);

        std::map<ElementId, IndicatorCategory> category;
        for (const auto& indicator : fw.indicators) category[indicator.id] = indicator.category;

        ObservationSet capability_only = obs;
        capability_only.observations.clear();
        ObservationSet effectiveness_only = obs;
        effectiveness_only.observations.clear();
        for (const auto& o : obs.observations) {
            if (is_capability_category(category.at(o.indicator))) {
                capability_only.observations.push_back(o);
            } else {
                effectiveness_only.observations.push_back(o);
            }
        }

        const std::string cap_full =
            emit_attainment_report(assess_capability(fw, m, obs, &adequacy));
        const std::string cap_pruned =
            emit_attainment_report(assess_capability(fw, m, capability_only, &adequacy));
        if (cap_full != cap_pruned) outcome.fail("capability bytes changed");

        const std::string eff_full =
            emit_attainment_report(assess_effectiveness(fw, m, obs, &adequacy));
        const std::string eff_pruned =
            emit_attainment_report(assess_effectiveness(fw, m, effectiveness_only, &adequacy));
        if (eff_full != eff_pruned) outcome.fail("effectiveness bytes changed");

        if (render_text(parse_attainment_report(cap_full)) !=
            render_text(parse_attainment_report(cap_pruned))) {
            outcome.fail("capability text rendering changed");
        }
    }
    return outcome;
}

// 7. Bottom-up assessment cannot run ahead of adequacy: the engine refuses
// a missing report, the CLI exits 1 without one, and --compute-adequacy
// succeeds and embeds the adequacy context.
Outcome ordering_constraint() {
    Outcome outcome;
    const ReferenceFramework fw = builtin_reference();
    const MethodDefinition scrum = find_corpus_entry("scrum")->method;
    ObservationSet obs;
    obs.organization = "acme";
    obs.method = "scrum";
    obs.observations = {{"standup-cadence", ObservationLevel::Full, "", {2026, 7, 1}}};

    const auto engine_code = [&](const std::function<void()>& f) -> std::string {
        try {
            f();
        } catch (const Error& error) {
            return error.code();
        }
        return "";
    };
    if (engine_code([&] { assess_capability(fw, scrum, obs, nullptr); }) != "adequacy-missing") {
        outcome.fail("engine capability without adequacy not refused");
    }
    if (engine_code([&] { assess_effectiveness(fw, scrum, obs, nullptr); }) !=
        "adequacy-missing") {
        outcome.fail("engine effectiveness without adequacy not refused");
    }

    const std::string obs_path = testrun::write_temp(
        "acceptance_obs.json",
        emit_observations(obs));
    for (const char* verb : {"capability", "effectiveness"}) {
        const auto bare = testrun::run_command(
            testrun::cli_path() + " " + verb +
            " --catalog builtin --method corpus:scrum --observations " + obs_path + " 2>&1");
        if (bare.exit_code != 1) {
            outcome.fail(std::string(verb) + " without adequacy exited " +
                         std::to_string(bare.exit_code) + ", want 1");
        }

        const auto computed = testrun::run_command(
            testrun::cli_path() + " " + verb +
            " --catalog builtin --method corpus:scrum --observations " + obs_path +
            " --compute-adequacy --format json 2>/dev/null");
        if (computed.exit_code != 0) {
            outcome.fail(std::string(verb) + " --compute-adequacy exited " +
                         std::to_string(computed.exit_code));
            continue;
        }
        const AttainmentReport report = parse_attainment_report(computed.output);
        if (report.adequacy_context.method != "scrum" ||
            report.adequacy_context.per_objective.empty()) {
            outcome.fail(std::string(verb) + " did not embed the adequacy context");
        }
    }
    return outcome;
}

// 8. The corpus comparison at desk scale: deterministic across runs,
// byte-identical to the committed golden files, all three methods clean.
Outcome corpus_comparison() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    const ReferenceFramework fw = builtin_reference();
    std::vector<MethodDefinition> methods;
    for (const CorpusEntry& entry : corpus()) {
        methods.push_back(entry.method);
        if (validate_method(fw, entry.method).has_errors()) {
            outcome.fail(entry.method.id + " fails validation");
        }
    }

    const ComparisonTable table = compare_adequacy(fw, methods);
    const std::string doc = emit_comparison_table(table);
    const std::string text = render_text(table);
    if (doc != emit_comparison_table(compare_adequacy(fw, methods))) {
        outcome.fail("document bytes differ across runs");
    }

    const std::string golden_doc = testrun::read_file(testrun::golden_dir() +
                                                      "/compare_corpus.json");
    const std::string golden_text = testrun::read_file(testrun::golden_dir() +
                                                       "/compare_corpus.txt");
    if (doc != golden_doc) outcome.fail("document differs from golden file");
    if (text != golden_text) outcome.fail("rendering differs from golden file");
    if (seconds_since(start) >= 1.0) outcome.fail("exceeded 1 s budget");

    const std::string cmd = testrun::cli_path() +
                            " compare --catalog builtin --method corpus:fdd"
                            " --method corpus:scrum --method corpus:xp";
    const auto one = testrun::run_command(cmd + " --format json 2>/dev/null");
    const auto two = testrun::run_command(cmd + " --format json 2>/dev/null");
    if (one.exit_code != 0 || one.output != two.output) {
        outcome.fail("CLI output not deterministic");
    }
    if (one.output != golden_doc) outcome.fail("CLI document differs from golden file");
    const auto rendered = testrun::run_command(cmd + " 2>/dev/null");
    if (rendered.output != golden_text) outcome.fail("CLI text differs from golden file");
    return outcome;
}

// 9. parse(emit(x)) == x for catalogs, methods, observation sets and all
// report kinds, over 200 randomized valid instances.
Outcome round_trip_fidelity() {
    Outcome outcome;
    testgen::Rng rng(1006);
    for (int round = 0; round < 200; ++round) {
        const ReferenceFramework fw = testgen::random_framework(rng);
        if (!(parse_catalog(emit_catalog(fw)).value == fw)) {
            outcome.fail("catalog round trip diverged");
        }

        const MethodDefinition m = testgen::random_method(rng, fw);
        if (!(parse_method(emit_method(m)).value == m)) {
            outcome.fail("method round trip diverged");
        }

        const ObservationSet obs = testgen::random_observations(rng, fw, m.id, 0.5);
        if (!(parse_observations(emit_observations(obs)).value == obs)) {
            outcome.fail("observation round trip diverged");
        }

        const AdequacyReport adequacy = assess_adequacy(fw, m);
        if (!(parse_adequacy_report(emit_adequacy_report(adequacy)) == adequacy)) {
            outcome.fail("adequacy report round trip diverged");
        }

        const AttainmentReport capability = assess_capability(fw, m, obs, &adequacy);
        if (!(parse_attainment_report(emit_attainment_report(capability)) == capability)) {
            outcome.fail("attainment report round trip diverged");
        }

        const ComparisonTable table = compare_adequacy(fw, {m});
        if (!(parse_comparison_table(emit_comparison_table(table)) == table)) {
            outcome.fail("comparison round trip diverged");
        }
    }
    return outcome;
}

// 10. Attainment arithmetic: the worked two-level mean is exact, and on 100
// random sparse observation sets every layer matches a brute-force
// aggregator bitwise, including which elements stay unassessed.
Outcome attainment_arithmetic() {
    Outcome outcome;

    ReferenceFramework fw;
    fw.metadata = {"arith", "1"};
    fw.objectives = {{"obj1", "Objective", "", ""}};
    fw.principles = {{"pri1", "Principle", "", ""}};
    fw.practices = {{"pra1", "Practice", "", ""}};
    fw.indicators = {
        {"ind1", "First", IndicatorCategory::Process, "", ""},
        {"ind2", "Second", IndicatorCategory::People, "", ""},
    };
    fw.op_links = {{"obj1", "pri1"}};
    fw.pp_links = {{"pri1", "pra1"}};
    fw.pi_links = {{"pra1", "ind1"}, {"pra1", "ind2"}};

    MethodDefinition m;
    m.id = "arith";
    m.objectives = {"obj1"};
    m.principles = {"pri1"};
    m.practices = {"pra1"};

    ObservationSet obs;
    obs.organization = "org";
    obs.method = "arith";
    obs.observations = {
        {"ind1", ObservationLevel::Partial, "", {2026, 1, 1}},
        {"ind2", ObservationLevel::Full, "", {2026, 1, 1}},
    };

    const AdequacyReport adequacy = assess_adequacy(fw, m);
    const AttainmentReport report = assess_capability(fw, m, obs, &adequacy);
    if (report.per_practice.at("pra1").attainment != 0.75) {
        outcome.fail("mean of {0.5, 1.0} is not exactly 0.75");
    }
    if (report.overall != 0.75) outcome.fail("overall does not carry the exact mean");

    testgen::Rng rng(1007);
    int mismatches = 0;
    for (int round = 0; round < 100; ++round) {
        const ReferenceFramework rfw = testgen::random_framework(rng);
        const MethodDefinition rm = testgen::random_method(rng, rfw);
        const ObservationSet robs = testgen::random_observations(rng, rfw, rm.id, 0.3);
        const AdequacyReport radequacy = assess_adequacy(rfw, rm);
        for (bool capability : {true, false}) {
            const AttainmentReport engine =
                capability ? assess_capability(rfw, rm, robs, &radequacy)
                           : assess_effectiveness(rfw, rm, robs, &radequacy);
            const testgen::OracleAttainment oracle =
                testgen::attainment_oracle(rfw, rm, robs, capability);
            for (const auto& [id, expected] : oracle.per_practice) {
                if (engine.per_practice.at(id).attainment != expected) ++mismatches;
            }
            for (const auto& [id, expected] : oracle.per_principle) {
                if (engine.per_principle.at(id).attainment != expected) ++mismatches;
            }
            for (const auto& [id, expected] : oracle.per_objective) {
                if (engine.per_objective.at(id).attainment != expected) ++mismatches;
            }
            if (engine.overall != oracle.overall) ++mismatches;
        }
    }
    if (mismatches != 0) outcome.fail(std::to_string(mismatches) + " aggregator mismatches");
    return outcome;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"flexibility chain reproduced in the built-in catalog", flexibility_chain},
        {"bottom-up reachability is the transpose of top-down", transpose_duality},
        {"full adoption scores exactly 1.0 with no flags", full_adoption_identity},
        {"suspect flags equal the brute-force set differences", suspect_flag_soundness},
        {"single-element additions never lower adequacy", adequacy_monotonicity},
        {"category filters separate bit-identically", category_separation},
        {"attainment refuses to run ahead of adequacy", ordering_constraint},
        {"corpus comparison matches the golden files", corpus_comparison},
        {"parse after emit is the identity", round_trip_fidelity},
        {"attainment arithmetic matches the naive aggregator", attainment_arithmetic},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& error) {
            outcome.fail(std::string("unexpected exception: ") + error.what());
        }
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
                  << criteria[i].first;
        if (!outcome.pass) std::cout << "  [" << outcome.detail << "]";
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
