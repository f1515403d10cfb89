#include "oppa/render.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace oppa {

namespace {

std::string fmt2(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string fmt2(const std::optional<double>& value) {
    return value ? fmt2(*value) : "unassessed";
}

std::string pad(std::string text, size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

struct Style {
    bool color;
    std::string heading(const std::string& text) const {
        return color ? "\x1b[1m" + text + "\x1b[0m" : text;
    }
    std::string alert(const std::string& text) const {
        return color ? "\x1b[31m" + text + "\x1b[0m" : text;
    }
    std::string caution(const std::string& text) const {
        return color ? "\x1b[33m" + text + "\x1b[0m" : text;
    }
};

/// Left-aligned columns sized to their widest cell.
class Table {
public:
    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void write(std::ostream& os, const std::string& indent = "") const {
        std::vector<size_t> widths;
        for (const auto& row : rows_) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
        }
        for (const auto& row : rows_) {
            os << indent;
            for (size_t i = 0; i < row.size(); ++i) {
                os << (i + 1 < row.size() ? pad(row[i], widths[i] + 2) : row[i]);
            }
            os << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string evidence_cell(const AttainmentDetail& detail) {
    return std::to_string(detail.observed_indicators) + "/" +
           std::to_string(detail.linked_indicators);
}

void write_gap_lines(std::ostream& os, const AdequacyReport& report, const Style& style,
                     const std::string& prefix) {
    bool any = false;
    for (const SuspectFlag& flag : report.suspect_flags) {
        os << "  " << prefix
           << style.alert(flag.code + " " + flag.subject + " (objective " + flag.context + ")")
           << "\n";
        any = true;
    }
    // One line per principle with unadopted linked practices; identical
    // under every objective, so deduplicate by principle id.
    std::map<ElementId, const CoverageDetail*> missing_by_principle;
    for (const auto& [objective, entry] : report.per_objective) {
        for (const CoverageDetail& coverage : entry.practice_coverage) {
            if (!coverage.missing.empty()) missing_by_principle.emplace(coverage.subject, &coverage);
        }
    }
    for (const auto& [principle, coverage] : missing_by_principle) {
        std::string ids;
        for (const ElementId& id : coverage->missing) {
            if (!ids.empty()) ids += ", ";
            ids += id;
        }
        os << "  " << prefix << principle << " missing practices: " << ids << "\n";
        any = true;
    }
    if (!any) os << "  " << prefix << "(none)\n";
}

}  // namespace

std::string render_text(const AdequacyReport& report, const RenderOptions& options) {
    const Style style{options.color};
    std::ostringstream os;
    os << style.heading("ADEQUACY") << "  method=" << report.method
       << "  overall=" << fmt2(report.overall_score) << "\n\n";

    Table table;
    table.add_row({"OBJECTIVE", "PRINCIPLES", "PRACTICES", "SCORE"});
    for (const auto& [objective, entry] : report.per_objective) {
        size_t practices_adopted = 0;
        size_t practices_linked = 0;
        for (const CoverageDetail& coverage : entry.practice_coverage) {
            practices_adopted += coverage.adopted.size();
            practices_linked += coverage.required.size();
        }
        table.add_row({objective,
                       std::to_string(entry.principle_coverage.adopted.size()) + "/" +
                           std::to_string(entry.principle_coverage.required.size()),
                       std::to_string(practices_adopted) + "/" + std::to_string(practices_linked),
                       fmt2(entry.score)});
    }
    table.write(os);

    os << "\n" << style.heading("GAPS") << "\n";
    write_gap_lines(os, report, style, "");
    return os.str();
}

std::string render_text(const AttainmentReport& report, const RenderOptions& options) {
    const Style style{options.color};
    std::ostringstream os;
    std::string kind = to_token(report.kind);
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    os << style.heading(kind) << "  method=" << report.method
       << "  organization=" << report.organization << "  overall=" << fmt2(report.overall)
       << "  qualified=" << (report.qualified ? "yes" : "no") << "\n";

    const auto section = [&](const char* column,
                             const std::map<ElementId, AttainmentDetail>& details) {
        os << "\n";
        Table table;
        table.add_row({column, "ATTAINMENT", "EVIDENCE"});
        for (const auto& [id, detail] : details) {
            table.add_row({id, fmt2(detail.attainment), evidence_cell(detail)});
        }
        table.write(os);
    };
    section("OBJECTIVE", report.per_objective);
    section("PRINCIPLE", report.per_principle);
    section("PRACTICE", report.per_practice);

    os << "\n" << style.heading("GAPS") << "\n";
    bool any = false;
    for (const auto& [id, detail] : report.per_practice) {
        if (!detail.attainment) {
            os << "  " << style.caution("unassessed practice " + id) << " ("
               << detail.observed_indicators << "/" << detail.linked_indicators << " "
               << to_token(report.kind) << " indicators observed)\n";
            any = true;
        }
    }
    if (report.qualified) {
        for (const SuspectFlag& flag : report.adequacy_context.suspect_flags) {
            os << "  adequacy flag: "
               << style.alert(flag.code + " " + flag.subject + " (objective " + flag.context +
                              ")")
               << "\n";
            any = true;
        }
    }
    if (!any) os << "  (none)\n";
    return os.str();
}

std::string render_text(const ComparisonTable& table, const RenderOptions& options) {
    const Style style{options.color};
    std::ostringstream os;
    os << style.heading("COMPARISON") << "  catalog=" << table.framework.name << " "
       << table.framework.version << "\n\n";

    Table grid;
    std::vector<std::string> header{"METHOD", "OVERALL"};
    header.insert(header.end(), table.objectives.begin(), table.objectives.end());
    grid.add_row(std::move(header));
    for (const ComparisonRow& row : table.rows) {
        std::vector<std::string> cells{row.method, fmt2(row.overall_score)};
        for (const ElementId& objective : table.objectives) {
            auto it = row.per_objective.find(objective);
            cells.push_back(it == row.per_objective.end() || !it->second.has_value()
                                ? "not-claimed"
                                : fmt2(*it->second));
        }
        grid.add_row(std::move(cells));
    }
    grid.write(os);
    return os.str();
}

std::string render_text(const ValidationReport& report, const RenderOptions& options) {
    const Style style{options.color};
    size_t errors = 0;
    size_t warnings = 0;
    for (const Issue& issue : report.issues) {
        (issue.severity == Severity::Error ? errors : warnings) += 1;
    }
    std::ostringstream os;
    os << style.heading("VALIDATION") << "  valid=" << (report.valid ? "yes" : "no")
       << "  errors=" << errors << "  warnings=" << warnings << "\n";
    for (const Issue& issue : report.issues) {
        const std::string line = to_token(issue.severity) + "  " + issue.code + "  " +
                                 issue.message + "  [" + issue.subject.to_string() + "]";
        os << "  "
           << (issue.severity == Severity::Error ? style.alert(line) : style.caution(line))
           << "\n";
    }
    return os.str();
}

}  // namespace oppa
