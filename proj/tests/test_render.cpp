#include <doctest.h>

#include <cstdio>

#include "oppa/assessment.hpp"
#include "oppa/builtin.hpp"
#include "oppa/render.hpp"
#include "oppa/validate.hpp"

using namespace oppa;

namespace {

MethodDefinition full_adoption(const ReferenceFramework& fw) {
    MethodDefinition m;
    m.id = "everything";
    m.name = "All of it";
    for (const auto& o : fw.objectives) m.objectives.insert(o.id);
    for (const auto& p : fw.principles) m.principles.insert(p.id);
    for (const auto& p : fw.practices) m.practices.insert(p.id);
    return m;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("a gapless adequacy report renders a clean table") {
    const ReferenceFramework fw = builtin_reference();
    const AdequacyReport report = assess_adequacy(fw, full_adoption(fw));

    const std::string text = render_text(report);
    CHECK(text == render_text(report));
    CHECK(contains(text, "ADEQUACY  method=everything  overall=1.00"));
    CHECK(contains(text, "OBJECTIVE"));
    CHECK(contains(text, "SCORE"));
    CHECK(contains(text, "GAPS\n  (none)\n"));
    CHECK_FALSE(contains(text, "\x1b["));
}

TEST_CASE("adequacy gaps list flags and the unadopted practices per principle") {
    const ReferenceFramework fw = builtin_reference();
    const AdequacyReport report = assess_adequacy(fw, find_corpus_entry("scrum")->method);

    const std::string text = render_text(report);
    CHECK(contains(text, "missing-principle simplicity (objective flexible)"));
    CHECK(contains(text, "unrealized-principle accommodate-change (objective flexible)"));
    CHECK(contains(text,
                   "accommodate-change missing practices: face-to-face-communication, "
                   "no-bruf, on-site-customer"));
}

TEST_CASE("color styling is opt-in and wraps the headings") {
    const ReferenceFramework fw = builtin_reference();
    const AdequacyReport report = assess_adequacy(fw, find_corpus_entry("scrum")->method);

    RenderOptions color;
    color.color = true;
    const std::string text = render_text(report, color);
    CHECK(contains(text, "\x1b[1mADEQUACY\x1b[0m"));
    CHECK(contains(text, "\x1b[31m"));
}

TEST_CASE("attainment rendering spells out unassessed entries") {
    const ReferenceFramework fw = builtin_reference();
    const MethodDefinition scrum = find_corpus_entry("scrum")->method;
    const AdequacyReport adequacy = assess_adequacy(fw, scrum);

    ObservationSet obs;
    obs.organization = "acme";
    obs.method = "scrum";
    obs.observations = {{"standup-cadence", ObservationLevel::Full, "", {2026, 7, 1}}};

    const AttainmentReport report = assess_capability(fw, scrum, obs, &adequacy);
    const std::string text = render_text(report);
    CHECK(contains(text, "CAPABILITY  method=scrum  organization=acme"));
    CHECK(contains(text, "qualified=yes"));
    CHECK(contains(text, "unassessed"));
    CHECK(contains(text, "unassessed practice retrospectives"));
    CHECK(contains(text, "adequacy flag: missing-principle simplicity (objective flexible)"));

    ObservationSet none;
    none.organization = "acme";
    none.method = "scrum";
    const AttainmentReport hollow = assess_effectiveness(fw, scrum, none, &adequacy);
    CHECK(contains(render_text(hollow), "EFFECTIVENESS"));
    CHECK(contains(render_text(hollow), "overall=unassessed"));
}

TEST_CASE("comparison rendering keeps rows in method id order") {
    const ReferenceFramework fw = builtin_reference();
    std::vector<MethodDefinition> methods;
    for (const CorpusEntry& entry : corpus()) methods.push_back(entry.method);

    const std::string text = render_text(compare_adequacy(fw, methods));
    CHECK(contains(text, "COMPARISON  catalog=opp-reference 1.0.0"));
    CHECK(contains(text, "METHOD"));
    CHECK(contains(text, "not-claimed"));
    const size_t fdd = text.find("\nfdd");
    const size_t scrum = text.find("\nscrum");
    const size_t xp = text.find("\nxp");
    REQUIRE(fdd != std::string::npos);
    REQUIRE(scrum != std::string::npos);
    REQUIRE(xp != std::string::npos);
    CHECK(fdd < scrum);
    CHECK(scrum < xp);
}

TEST_CASE("rendered scores agree with the document form at two decimals") {
    const ReferenceFramework fw = builtin_reference();
    const AdequacyReport report = assess_adequacy(fw, find_corpus_entry("xp")->method);

    char expected[32];
    std::snprintf(expected, sizeof(expected), "overall=%.2f", report.overall_score);
    CHECK(contains(render_text(report), expected));
}

TEST_CASE("validation rendering counts severities and prints subjects") {
    ReferenceFramework fw = builtin_reference();
    fw.pp_links.push_back({"accommodate-change", "ghost"});
    const ValidationReport report = validate_framework(fw);

    const std::string text = render_text(report);
    CHECK(contains(text, "VALIDATION  valid=no  errors=1  warnings=0"));
    CHECK(contains(text, "error  dangling-link"));
    CHECK(contains(text, "[accommodate-change -> ghost]"));

    ValidationReport clean;
    CHECK(contains(render_text(clean), "VALIDATION  valid=yes  errors=0  warnings=0"));
}
