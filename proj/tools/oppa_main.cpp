#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "oppa/assessment.hpp"
#include "oppa/builtin.hpp"
#include "oppa/catalog_io.hpp"
#include "oppa/render.hpp"
#include "oppa/report_io.hpp"
#include "oppa/validate.hpp"

namespace {

using namespace oppa;

// Exit codes: 0 success, 1 usage, 2 validation failure, 3 threshold not
// met, 4 I/O failure.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kBelowThreshold = 3;
constexpr int kIoError = 4;

struct IoFailure {
    std::string path;
    std::string reason;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure{path, "cannot open file"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoFailure{path, "read failed"};
    return buffer.str();
}

RenderOptions render_options() {
    RenderOptions options;
    options.color = ::isatty(STDOUT_FILENO) != 0 && std::getenv("OPPA_NO_COLOR") == nullptr;
    return options;
}

void print_warnings(const std::vector<Issue>& warnings, const std::string& context) {
    for (const Issue& warning : warnings) {
        std::cerr << context << ": warning " << warning.code << ": " << warning.message
                  << "\n";
    }
}

ReferenceFramework load_catalog(const std::string& spec) {
    if (spec == "builtin") return builtin_reference();
    Parsed<ReferenceFramework> parsed = parse_catalog(read_file(spec));
    print_warnings(parsed.warnings, spec);
    return std::move(parsed.value);
}

MethodDefinition load_method(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) {
        const std::string id = spec.substr(7);
        if (auto entry = find_corpus_entry(id)) return entry->method;
        throw IoFailure{spec, "no such corpus method (known: fdd, scrum, xp)"};
    }
    Parsed<MethodDefinition> parsed = parse_method(read_file(spec));
    print_warnings(parsed.warnings, spec);
    return std::move(parsed.value);
}

ObservationSet load_observations(const std::string& path) {
    Parsed<ObservationSet> parsed = parse_observations(read_file(path));
    print_warnings(parsed.warnings, path);
    return std::move(parsed.value);
}

struct ValidateArgs {
    std::string catalog;
    std::string method;
    std::string observations;
};

int run_validate(const ValidateArgs& args) {
    const RenderOptions options = render_options();
    bool all_valid = true;

    ReferenceFramework framework;
    if (args.catalog == "builtin") {
        framework = builtin_reference();
    } else {
        // Schema-only parse so a structurally broken framework still gets
        // its issue list instead of one thrown error.
        Parsed<ReferenceFramework> parsed = parse_catalog_unchecked(read_file(args.catalog));
        print_warnings(parsed.warnings, args.catalog);
        framework = std::move(parsed.value);
    }
    const ValidationReport framework_report = validate_framework(framework);
    all_valid = all_valid && framework_report.valid;
    std::cerr << "catalog " << args.catalog << "\n"
              << render_text(framework_report, options);

    std::optional<MethodDefinition> method;
    if (!args.method.empty()) {
        if (!framework_report.valid) {
            std::cerr << "method " << args.method
                      << "\n  skipped: catalog failed validation\n";
            all_valid = false;
        } else {
            method = load_method(args.method);
            const ValidationReport report = validate_method(framework, *method);
            all_valid = all_valid && report.valid;
            std::cerr << "method " << args.method << "\n" << render_text(report, options);
        }
    }

    if (!args.observations.empty()) {
        if (!framework_report.valid) {
            std::cerr << "observations " << args.observations
                      << "\n  skipped: catalog failed validation\n";
            all_valid = false;
        } else {
            const ObservationSet observations = load_observations(args.observations);
            const ValidationReport report =
                validate_observations(framework, observations, method ? &*method : nullptr);
            all_valid = all_valid && report.valid;
            std::cerr << "observations " << args.observations << "\n"
                      << render_text(report, options);
        }
    }

    if (all_valid) std::cout << "valid\n";
    return all_valid ? kOk : kInvalid;
}

void print_method_diagnostics(const ReferenceFramework& framework,
                              const MethodDefinition& method) {
    const ValidationReport report = validate_method(framework, method);
    for (const Issue& issue : report.issues) {
        if (issue.severity == Severity::Warning) {
            std::cerr << "method " << method.id << ": warning " << issue.code << ": "
                      << issue.message << " [" << issue.subject.to_string() << "]\n";
        }
    }
}

struct AdequacyArgs {
    std::string catalog;
    std::string method;
    std::string format = "text";
    std::optional<double> fail_under;
};

int run_adequacy(const AdequacyArgs& args) {
    const ReferenceFramework framework = load_catalog(args.catalog);
    const MethodDefinition method = load_method(args.method);
    print_method_diagnostics(framework, method);

    const AdequacyReport report = assess_adequacy(framework, method);
    if (args.format == "json") {
        std::cout << emit_adequacy_report(report);
    } else {
        std::cout << render_text(report, render_options());
    }
    if (args.fail_under && report.overall_score < *args.fail_under) {
        std::cerr << "overall adequacy " << report.overall_score << " is below threshold "
                  << *args.fail_under << "\n";
        return kBelowThreshold;
    }
    return kOk;
}

struct AttainmentArgs {
    std::string catalog;
    std::string method;
    std::string observations;
    std::string adequacy_path;
    bool compute_adequacy = false;
    std::string format = "text";
};

int run_attainment(AttainmentKind kind, const AttainmentArgs& args) {
    const ReferenceFramework framework = load_catalog(args.catalog);
    const MethodDefinition method = load_method(args.method);
    print_method_diagnostics(framework, method);
    const ObservationSet observations = load_observations(args.observations);

    AdequacyReport adequacy;
    if (!args.adequacy_path.empty()) {
        adequacy = parse_adequacy_report(read_file(args.adequacy_path));
    } else {
        adequacy = assess_adequacy(framework, method);
    }

    const AttainmentReport report =
        kind == AttainmentKind::Capability
            ? assess_capability(framework, method, observations, &adequacy)
            : assess_effectiveness(framework, method, observations, &adequacy);

    // Out-of-category observations are ignored by design; note it on
    // stderr so the report itself stays category-pure.
    std::map<ElementId, IndicatorCategory> category_of;
    for (const Indicator& indicator : framework.indicators) {
        category_of.emplace(indicator.id, indicator.category);
    }
    int ignored = 0;
    for (const IndicatorObservation& obs : observations.observations) {
        const IndicatorCategory category = category_of.at(obs.indicator);
        const bool usable = kind == AttainmentKind::Capability
                                ? is_capability_category(category)
                                : is_effectiveness_category(category);
        if (!usable) ++ignored;
    }
    if (ignored > 0) {
        std::cerr << "note: " << ignored << " observation(s) outside the " << to_token(kind)
                  << " category set were ignored\n";
    }

    if (args.format == "json") {
        std::cout << emit_attainment_report(report);
    } else {
        std::cout << render_text(report, render_options());
    }
    return kOk;
}

struct CompareArgs {
    std::string catalog;
    std::vector<std::string> methods;
    std::string format = "text";
    std::optional<double> fail_under;
};

int run_compare(const CompareArgs& args) {
    const ReferenceFramework framework = load_catalog(args.catalog);
    std::vector<MethodDefinition> methods;
    for (const std::string& spec : args.methods) {
        methods.push_back(load_method(spec));
        print_method_diagnostics(framework, methods.back());
    }

    const ComparisonTable table = compare_adequacy(framework, methods);
    if (args.format == "json") {
        std::cout << emit_comparison_table(table);
    } else {
        std::cout << render_text(table, render_options());
    }
    if (args.fail_under) {
        for (const ComparisonRow& row : table.rows) {
            if (row.overall_score < *args.fail_under) {
                std::cerr << "method " << row.method << " overall adequacy "
                          << row.overall_score << " is below threshold " << *args.fail_under
                          << "\n";
                return kBelowThreshold;
            }
        }
    }
    return kOk;
}

struct CatalogShowArgs {
    bool builtin = false;
    std::string catalog;
    std::string format = "text";
};

int run_catalog_show(const CatalogShowArgs& args) {
    const ReferenceFramework framework =
        args.catalog.empty() ? builtin_reference() : load_catalog(args.catalog);
    if (args.format == "json") {
        std::cout << emit_catalog(framework);
        return kOk;
    }

    const ReferenceFramework canon = framework.canonicalized();
    std::cout << "CATALOG  " << canon.metadata.name << " " << canon.metadata.version << "\n"
              << "  objectives: " << canon.objectives.size()
              << "  principles: " << canon.principles.size()
              << "  practices: " << canon.practices.size()
              << "  indicators: " << canon.indicators.size() << "\n\n";
    for (const Objective& objective : canon.objectives) {
        std::cout << "objective " << objective.id << "  (" << objective.name << ")\n";
        for (const auto& [from, to] : canon.op_links) {
            if (from == objective.id) std::cout << "  principle " << to << "\n";
        }
    }
    std::cout << "\n";
    for (const Principle& principle : canon.principles) {
        std::cout << "principle " << principle.id << "  (" << principle.name << ")\n";
        for (const auto& [from, to] : canon.pp_links) {
            if (from == principle.id) std::cout << "  practice " << to << "\n";
        }
    }
    std::cout << "\n";
    for (const Practice& practice : canon.practices) {
        std::cout << "practice " << practice.id << "  (" << practice.name << ")\n";
        for (const auto& [from, to] : canon.pi_links) {
            if (from == practice.id) std::cout << "  indicator " << to << "\n";
        }
    }
    std::cout << "\n";
    for (const Indicator& indicator : canon.indicators) {
        std::cout << "indicator " << indicator.id << "  [" << to_token(indicator.category)
                  << "]  (" << indicator.name << ")\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Assess agile methods against an objectives-principles-practices catalog"};
    app.require_subcommand(1);

    ValidateArgs validate_args;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Validate a catalog, and optionally a method and "
                                       "observation set against it");
    validate_cmd->add_option("--catalog", validate_args.catalog, "Catalog path or 'builtin'")
        ->required();
    validate_cmd->add_option("--method", validate_args.method,
                             "Method path or 'corpus:<id>'");
    validate_cmd->add_option("--observations", validate_args.observations,
                             "Observation set path");

    AdequacyArgs adequacy_args;
    CLI::App* adequacy_cmd =
        app.add_subcommand("adequacy", "Top-down adequacy of a method's objectives");
    adequacy_cmd->add_option("--catalog", adequacy_args.catalog, "Catalog path or 'builtin'")
        ->required();
    adequacy_cmd->add_option("--method", adequacy_args.method, "Method path or 'corpus:<id>'")
        ->required();
    adequacy_cmd->add_option("--format", adequacy_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    adequacy_cmd
        ->add_option("--fail-under", adequacy_args.fail_under,
                     "Exit 3 when overall adequacy is below this threshold")
        ->check(CLI::Range(0.0, 1.0));

    const auto add_attainment_options = [](CLI::App* cmd, AttainmentArgs& args) {
        cmd->add_option("--catalog", args.catalog, "Catalog path or 'builtin'")->required();
        cmd->add_option("--method", args.method, "Method path or 'corpus:<id>'")->required();
        cmd->add_option("--observations", args.observations, "Observation set path")
            ->required();
        cmd->add_option("--adequacy", args.adequacy_path,
                        "Previously produced adequacy report (JSON)");
        cmd->add_flag("--compute-adequacy", args.compute_adequacy,
                      "Derive the prerequisite adequacy report inline");
        cmd->add_option("--format", args.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    AttainmentArgs capability_args;
    CLI::App* capability_cmd = app.add_subcommand(
        "capability", "Bottom-up capability from people/process/project observations");
    add_attainment_options(capability_cmd, capability_args);

    AttainmentArgs effectiveness_args;
    CLI::App* effectiveness_cmd = app.add_subcommand(
        "effectiveness",
        "Bottom-up effectiveness from process-artifact/product observations");
    add_attainment_options(effectiveness_cmd, effectiveness_args);

    CompareArgs compare_args;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Side-by-side adequacy of several methods");
    compare_cmd->add_option("--catalog", compare_args.catalog, "Catalog path or 'builtin'")
        ->required();
    compare_cmd
        ->add_option("--method", compare_args.methods,
                     "Method path or 'corpus:<id>' (repeatable)")
        ->required();
    compare_cmd->add_option("--format", compare_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    compare_cmd
        ->add_option("--fail-under", compare_args.fail_under,
                     "Exit 3 when any method's overall adequacy is below this threshold")
        ->check(CLI::Range(0.0, 1.0));

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "Inspect catalogs");
    catalog_cmd->require_subcommand(1);
    CatalogShowArgs show_args;
    CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "Print a catalog");
    CLI::Option* builtin_flag = show_cmd->add_flag("--builtin", show_args.builtin,
                                                   "Show the built-in catalog (default)");
    show_cmd->add_option("--catalog", show_args.catalog, "Catalog path")
        ->excludes(builtin_flag);
    show_cmd->add_option("--format", show_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(validate_args);
        if (adequacy_cmd->parsed()) return run_adequacy(adequacy_args);
        if (capability_cmd->parsed() || effectiveness_cmd->parsed()) {
            const bool capability = capability_cmd->parsed();
            const AttainmentArgs& args = capability ? capability_args : effectiveness_args;
            if (args.adequacy_path.empty() && !args.compute_adequacy) {
                std::cerr << "usage error: " << (capability ? "capability" : "effectiveness")
                          << " requires the method's adequacy to be determined first; pass "
                             "--adequacy <report.json> or --compute-adequacy\n";
                return kUsage;
            }
            if (!args.adequacy_path.empty() && args.compute_adequacy) {
                std::cerr << "usage error: --adequacy and --compute-adequacy are mutually "
                             "exclusive\n";
                return kUsage;
            }
            return run_attainment(
                capability ? AttainmentKind::Capability : AttainmentKind::Effectiveness, args);
        }
        if (compare_cmd->parsed()) return run_compare(compare_args);
        if (show_cmd->parsed()) return run_catalog_show(show_args);
        std::cerr << "usage error: no subcommand\n";
        return kUsage;
    } catch (const IoFailure& failure) {
        std::cerr << "i/o error: " << failure.path << ": " << failure.reason << "\n";
        return kIoError;
    } catch (const SemanticError& error) {
        std::cerr << "invalid document: " << error.what() << "\n"
                  << render_text(error.report(), RenderOptions{});
        return kInvalid;
    } catch (const ParseError& error) {
        std::cerr << error.code() << ": " << error.what();
        if (error.line() > 0) std::cerr << " (line " << error.line() << ")";
        std::cerr << "\n";
        return kInvalid;
    } catch (const Error& error) {
        if (error.code() == "adequacy-missing") {
            std::cerr << "usage error: " << error.what() << "\n";
            return kUsage;
        }
        std::cerr << error.code() << ": " << error.what() << "\n";
        return kInvalid;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return kIoError;
    }
}
