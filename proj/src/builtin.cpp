#include "oppa/builtin.hpp"

namespace oppa {

namespace {

constexpr const char* kValue1 = "Agile Manifesto (2001), value 1: individuals and interactions "
                                "over processes and tools";
constexpr const char* kValue2 = "Agile Manifesto (2001), value 2: working software over "
                                "comprehensive documentation";
constexpr const char* kValue3 = "Agile Manifesto (2001), value 3: customer collaboration over "
                                "contract negotiation";
constexpr const char* kValue4 = "Agile Manifesto (2001), value 4: responding to change over "
                                "following a plan";

std::string principle_source(int number, const std::string& text) {
    return "Agile Manifesto (2001), principle " + std::to_string(number) + ": " + text;
}

ReferenceFramework build_catalog() {
    ReferenceFramework fw;
    fw.metadata = {"opp-reference", "1.0.0"};

    fw.objectives = {
        {"flexible", "Flexible",
         "The method lets the team change direction as understanding of the product and its "
         "market evolves.",
         kValue4},
        {"customer-collaborative", "Customer Collaborative",
         "The method keeps the customer inside the development loop rather than behind a "
         "contract.",
         kValue3},
        {"deliver-value-early", "Delivers Value Early",
         "The method gets working, valuable software into users' hands early and continuously.",
         kValue2},
        {"people-centric", "People Centric",
         "The method builds around motivated individuals and direct human interaction.",
         kValue1},
        {"quality-focused", "Quality Focused",
         "The method sustains technical quality so that the product stays cheap to change.",
         principle_source(9, "continuous attention to technical excellence and good design "
                             "enhances agility")},
    };

    fw.principles = {
        {"accommodate-change", "Accommodate Change",
         "Welcome changing requirements at any point instead of freezing scope up front.",
         principle_source(2, "welcome changing requirements, even late in development")},
        {"frequent-delivery", "Frequent Delivery",
         "Deliver working software in short cycles, from weeks down to days.",
         principle_source(3, "deliver working software frequently")},
        {"customer-involvement", "Customer Involvement",
         "Business people and developers collaborate throughout the project.",
         principle_source(4, "business people and developers must work together daily")},
        {"direct-communication", "Direct Communication",
         "Prefer direct conversation over documents and intermediaries.",
         principle_source(6, "face-to-face conversation is the most efficient and effective "
                             "method of conveying information")},
        {"empowered-teams", "Empowered Teams",
         "Trust motivated, self-organizing teams to shape their own work.",
         principle_source(5, "build projects around motivated individuals") + "; " +
             principle_source(11, "the best architectures, requirements, and designs emerge "
                                  "from self-organizing teams")},
        {"technical-excellence", "Technical Excellence",
         "Invest continuously in design quality and engineering discipline.",
         principle_source(9, "continuous attention to technical excellence and good design "
                             "enhances agility")},
        {"simplicity", "Simplicity",
         "Maximize the amount of work not done; build the simplest thing that works.",
         principle_source(10, "simplicity -- the art of maximizing the amount of work not done "
                              "-- is essential")},
        {"continuous-improvement", "Continuous Improvement",
         "Reflect at regular intervals and tune behavior accordingly.",
         principle_source(12, "at regular intervals, the team reflects on how to become more "
                              "effective")},
        {"working-software-measure", "Working Software as the Measure",
         "Judge progress by running software, not by interim artifacts.",
         principle_source(7, "working software is the primary measure of progress")},
        {"constant-pace", "Constant Pace",
         "Keep a rhythm the team can sustain indefinitely.",
         principle_source(8, "agile processes promote sustainable development ... a constant "
                             "pace indefinitely")},
    };

    fw.practices = {
        {"face-to-face-communication", "Face-to-Face Communication",
         "Team members and stakeholders talk directly, in person or over rich channels.",
         principle_source(6, "face-to-face conversation")},
        {"on-site-customer", "On-Site Customer",
         "A customer representative sits with the team and answers questions as they arise.",
         principle_source(4, "business people and developers must work together daily")},
        {"no-bruf", "No Big Requirements Up Front",
         "Requirements are captured incrementally as stories or features instead of one "
         "exhaustive up-front document.",
         kValue2},
        {"iterative-development", "Iterative Development",
         "Work proceeds in fixed-length timeboxed iterations.",
         principle_source(3, "deliver working software frequently")},
        {"small-releases", "Small Releases",
         "Release small, frequent increments of the product.",
         principle_source(1, "early and continuous delivery of valuable software")},
        {"continuous-integration", "Continuous Integration",
         "Changes are integrated and verified against the whole system at least daily.",
         principle_source(3, "deliver working software frequently")},
        {"test-driven-development", "Test-Driven Development",
         "Automated tests are written with (or before) the code they verify.",
         principle_source(9, "technical excellence")},
        {"refactoring", "Refactoring",
         "The design is continuously improved without changing behavior.",
         principle_source(9, "technical excellence and good design")},
        {"simple-design", "Simple Design",
         "The team builds the simplest design that supports today's requirements.",
         principle_source(10, "simplicity")},
        {"pair-programming", "Pair Programming",
         "Two developers work together at one workstation, reviewing continuously.",
         kValue1},
        {"daily-standup", "Daily Standup",
         "A short daily meeting synchronizes the team.",
         principle_source(6, "face-to-face conversation")},
        {"retrospectives", "Retrospectives",
         "The team holds a regular meeting to inspect and adapt its own process.",
         principle_source(12, "the team reflects on how to become more effective")},
        {"self-organizing-team", "Self-Organizing Team",
         "The team decides internally who does what, when and how.",
         principle_source(11, "self-organizing teams")},
        {"collective-ownership", "Collective Code Ownership",
         "Anyone on the team may change any part of the code base.",
         kValue1},
        {"sustainable-pace", "Sustainable Pace",
         "Working hours are kept at a level the team can sustain indefinitely.",
         principle_source(8, "a constant pace indefinitely")},
        {"product-backlog", "Prioritized Product Backlog",
         "A single ordered list of desired work is kept visible and continuously groomed.",
         kValue3},
        {"customer-demos", "Working Software Demos",
         "Each increment is demonstrated to customers and stakeholders for feedback.",
         principle_source(7, "working software is the primary measure of progress")},
        {"regular-builds", "Regular Builds",
         "The whole system is built on a fixed cadence to keep it demonstrably working.",
         principle_source(7, "working software is the primary measure of progress")},
        {"feature-teams", "Feature Teams",
         "Small teams form around client-valued features with all needed skills.",
         principle_source(11, "self-organizing teams")},
        {"domain-modeling", "Domain Object Modeling",
         "The team builds a shared object model of the problem domain before building features.",
         principle_source(9, "good design enhances agility")},
        {"code-inspections", "Code Inspections",
         "Completed work is reviewed or inspected by peers.",
         principle_source(9, "technical excellence")},
        {"coding-standards", "Coding Standards",
         "The team writes all code to a shared published convention.",
         principle_source(9, "technical excellence")},
        {"iteration-planning", "Collaborative Iteration Planning",
         "Customer and team jointly select and scope the work for the next cycle.",
         principle_source(4, "business people and developers must work together daily")},
    };

    fw.indicators = {
        // capability: people / process / project
        {"team-collocation", "Team Collocation", IndicatorCategory::People,
         "Team members share a workspace or equivalently rich communication channels.",
         principle_source(6, "face-to-face conversation")},
        {"cross-functional-skills", "Cross-Functional Skills", IndicatorCategory::People,
         "The team collectively covers every skill the product needs.",
         principle_source(11, "self-organizing teams")},
        {"customer-availability", "Customer Availability", IndicatorCategory::People,
         "A decision-capable customer representative is reachable daily.",
         principle_source(4, "business people and developers must work together daily")},
        {"standup-cadence", "Standup Cadence", IndicatorCategory::Process,
         "Short synchronization meetings happen daily and stay timeboxed.",
         principle_source(6, "face-to-face conversation")},
        {"iteration-cadence", "Iteration Cadence", IndicatorCategory::Process,
         "Fixed-length iterations start and end on schedule.",
         principle_source(3, "deliver working software frequently")},
        {"ci-pipeline-active", "CI Pipeline Active", IndicatorCategory::Process,
         "An automated build-and-test pipeline runs on every change.",
         principle_source(3, "deliver working software frequently")},
        {"retrospective-cadence", "Retrospective Cadence", IndicatorCategory::Process,
         "Retrospectives happen every iteration and produce actions.",
         principle_source(12, "the team reflects on how to become more effective")},
        {"pairing-frequency", "Pairing Frequency", IndicatorCategory::Process,
         "Developers regularly work in pairs on production code.", kValue1},
        {"backlog-maintained", "Backlog Maintained", IndicatorCategory::Project,
         "A single prioritized backlog exists and is visibly groomed.", kValue3},
        {"release-plan-visible", "Release Plan Visible", IndicatorCategory::Project,
         "A lightweight release plan or burn chart is current and visible.",
         principle_source(1, "early and continuous delivery")},
        {"team-stability", "Team Stability", IndicatorCategory::Project,
         "Team composition and workload stay steady across iterations.",
         principle_source(8, "a constant pace indefinitely")},
        // effectiveness: process-artifact / product
        {"automated-test-suite", "Automated Test Suite", IndicatorCategory::ProcessArtifact,
         "A maintained automated test suite exercises the product.",
         principle_source(9, "technical excellence")},
        {"build-logs-green", "Green Build Record", IndicatorCategory::ProcessArtifact,
         "Build history shows frequent, predominantly passing builds.",
         principle_source(7, "working software is the primary measure of progress")},
        {"refactoring-commits", "Refactoring Activity", IndicatorCategory::ProcessArtifact,
         "Change history shows steady behavior-preserving design improvements.",
         principle_source(9, "good design enhances agility")},
        {"lightweight-requirements", "Lightweight Requirements", IndicatorCategory::ProcessArtifact,
         "Requirements live as stories or features, not a frozen up-front volume.", kValue2},
        {"code-style-conformance", "Code Style Conformance", IndicatorCategory::ProcessArtifact,
         "The code base measurably follows the published team convention.",
         principle_source(9, "technical excellence")},
        {"working-increment", "Working Increment", IndicatorCategory::Product,
         "A potentially shippable product increment exists at the end of each cycle.",
         principle_source(7, "working software is the primary measure of progress")},
        {"defect-rate-trend", "Defect Rate Trend", IndicatorCategory::Product,
         "Escaped-defect rates are stable or falling release over release.",
         principle_source(9, "technical excellence")},
        {"customer-acceptance", "Customer Acceptance", IndicatorCategory::Product,
         "Delivered features are accepted by the customer without rework cycles.", kValue3},
    };

    fw.op_links = {
        {"flexible", "accommodate-change"},
        {"flexible", "frequent-delivery"},
        {"flexible", "simplicity"},
        {"customer-collaborative", "customer-involvement"},
        {"customer-collaborative", "direct-communication"},
        {"deliver-value-early", "frequent-delivery"},
        {"deliver-value-early", "working-software-measure"},
        {"people-centric", "empowered-teams"},
        {"people-centric", "direct-communication"},
        {"people-centric", "constant-pace"},
        {"people-centric", "continuous-improvement"},
        {"quality-focused", "technical-excellence"},
        {"quality-focused", "simplicity"},
        {"quality-focused", "continuous-improvement"},
    };

    // accommodate-change carries exactly its three canonical practices;
    // no-bruf deliberately has no other parent.
    fw.pp_links = {
        {"accommodate-change", "face-to-face-communication"},
        {"accommodate-change", "on-site-customer"},
        {"accommodate-change", "no-bruf"},
        {"frequent-delivery", "iterative-development"},
        {"frequent-delivery", "small-releases"},
        {"frequent-delivery", "continuous-integration"},
        {"customer-involvement", "on-site-customer"},
        {"customer-involvement", "product-backlog"},
        {"customer-involvement", "customer-demos"},
        {"customer-involvement", "iteration-planning"},
        {"direct-communication", "face-to-face-communication"},
        {"direct-communication", "daily-standup"},
        {"direct-communication", "pair-programming"},
        {"empowered-teams", "self-organizing-team"},
        {"empowered-teams", "collective-ownership"},
        {"empowered-teams", "feature-teams"},
        {"technical-excellence", "test-driven-development"},
        {"technical-excellence", "refactoring"},
        {"technical-excellence", "continuous-integration"},
        {"technical-excellence", "pair-programming"},
        {"technical-excellence", "regular-builds"},
        {"technical-excellence", "code-inspections"},
        {"technical-excellence", "coding-standards"},
        {"technical-excellence", "domain-modeling"},
        {"simplicity", "simple-design"},
        {"simplicity", "refactoring"},
        {"continuous-improvement", "retrospectives"},
        {"continuous-improvement", "code-inspections"},
        {"working-software-measure", "customer-demos"},
        {"working-software-measure", "regular-builds"},
        {"constant-pace", "sustainable-pace"},
        {"constant-pace", "iterative-development"},
    };

    fw.pi_links = {
        {"face-to-face-communication", "team-collocation"},
        {"daily-standup", "team-collocation"},
        {"daily-standup", "standup-cadence"},
        {"self-organizing-team", "cross-functional-skills"},
        {"feature-teams", "cross-functional-skills"},
        {"on-site-customer", "customer-availability"},
        {"on-site-customer", "customer-acceptance"},
        {"customer-demos", "customer-availability"},
        {"customer-demos", "customer-acceptance"},
        {"customer-demos", "working-increment"},
        {"iterative-development", "iteration-cadence"},
        {"iterative-development", "working-increment"},
        {"small-releases", "iteration-cadence"},
        {"small-releases", "release-plan-visible"},
        {"small-releases", "working-increment"},
        {"continuous-integration", "ci-pipeline-active"},
        {"continuous-integration", "build-logs-green"},
        {"regular-builds", "ci-pipeline-active"},
        {"regular-builds", "build-logs-green"},
        {"retrospectives", "retrospective-cadence"},
        {"pair-programming", "pairing-frequency"},
        {"product-backlog", "backlog-maintained"},
        {"iteration-planning", "backlog-maintained"},
        {"sustainable-pace", "team-stability"},
        {"collective-ownership", "team-stability"},
        {"test-driven-development", "automated-test-suite"},
        {"test-driven-development", "defect-rate-trend"},
        {"refactoring", "refactoring-commits"},
        {"no-bruf", "lightweight-requirements"},
        {"coding-standards", "code-style-conformance"},
        {"code-inspections", "defect-rate-trend"},
    };

    return fw;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    {
        MethodDefinition xp;
        xp.id = "xp";
        xp.name = "Extreme Programming";
        xp.objectives = {"flexible", "quality-focused", "customer-collaborative",
                         "deliver-value-early", "people-centric"};
        xp.principles = {"accommodate-change", "frequent-delivery",   "customer-involvement",
                         "direct-communication", "empowered-teams",   "technical-excellence",
                         "simplicity",           "constant-pace",     "working-software-measure"};
        xp.practices = {"face-to-face-communication",
                        "on-site-customer",
                        "no-bruf",
                        "iteration-planning",
                        "small-releases",
                        "iterative-development",
                        "continuous-integration",
                        "test-driven-development",
                        "refactoring",
                        "simple-design",
                        "pair-programming",
                        "collective-ownership",
                        "coding-standards",
                        "sustainable-pace",
                        "daily-standup"};
        xp.notes = "Engineering-centric method; strongest on technical practices.";
        entries.push_back(
            {std::move(xp),
             "Curated from Kent Beck, Extreme Programming Explained (1999): planning game, "
             "small releases, simple design, testing, refactoring, pair programming, "
             "collective ownership, continuous integration, 40-hour week, on-site customer, "
             "coding standards. Mapping: the planning game -> iteration-planning; 40-hour "
             "week -> sustainable-pace; story cards instead of specification volumes -> "
             "no-bruf; XP stand-up meeting -> daily-standup."});
    }

    {
        MethodDefinition scrum;
        scrum.id = "scrum";
        scrum.name = "Scrum";
        scrum.objectives = {"flexible", "deliver-value-early", "customer-collaborative",
                            "people-centric"};
        scrum.principles = {"accommodate-change",   "frequent-delivery",
                            "customer-involvement", "empowered-teams",
                            "continuous-improvement", "direct-communication",
                            "working-software-measure", "constant-pace"};
        scrum.practices = {"iterative-development", "iteration-planning", "daily-standup",
                           "retrospectives",        "product-backlog",    "customer-demos",
                           "self-organizing-team",  "sustainable-pace"};
        scrum.notes = "Management framework; prescribes no engineering practices.";
        entries.push_back(
            {std::move(scrum),
             "Curated from Ken Schwaber and Jeff Sutherland, The Scrum Guide: sprints, "
             "sprint planning, daily scrum, sprint review, sprint retrospective, product "
             "backlog, self-organizing cross-functional teams. Mapping: sprint -> "
             "iterative-development; sprint planning -> iteration-planning; sprint review -> "
             "customer-demos; daily scrum -> daily-standup; the fixed sprint cadence -> "
             "sustainable-pace."});
    }

    {
        MethodDefinition fdd;
        fdd.id = "fdd";
        fdd.name = "Feature-Driven Development";
        fdd.objectives = {"deliver-value-early", "quality-focused", "customer-collaborative"};
        fdd.principles = {"frequent-delivery", "technical-excellence",
                          "working-software-measure", "continuous-improvement",
                          "direct-communication"};
        fdd.practices = {"domain-modeling", "regular-builds", "code-inspections",
                         "small-releases", "face-to-face-communication"};
        fdd.notes = "Feature-paced, model-driven method with individual class ownership.";
        entries.push_back(
            {std::move(fdd),
             "Curated from Stephen Palmer and John Felsing, A Practical Guide to "
             "Feature-Driven Development (2002): develop an overall model, build a features "
             "list, plan / design / build by feature, inspections, regular builds, reporting "
             "of results. Mapping: domain walkthroughs -> face-to-face-communication and "
             "domain-modeling; feature-scoped completion -> small-releases. Individual class "
             "ownership is not collective ownership, so no ownership practice is claimed."});
    }

    return entries;
}

}  // namespace

ReferenceFramework builtin_reference() {
    static const ReferenceFramework catalog = build_catalog();
    return catalog;
}

std::vector<CorpusEntry> corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& id) {
    for (const auto& entry : corpus()) {
        if (entry.method.id == id) return entry;
    }
    return std::nullopt;
}

}  // namespace oppa
