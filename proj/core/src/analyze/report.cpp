#include "iacbench/analyze/report.hpp"

#include <cstdio>

#include "iacbench/common/csv.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::analyze {

namespace {

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string rate_text(long long num, long long den) {
    if (den == 0) return "n/a";
    return fmt1(100.0 * static_cast<double>(num) / static_cast<double>(den)) + "% (" +
           std::to_string(num) + "/" + std::to_string(den) + ")";
}

} // namespace

std::string render_error_report(const CorpusErrorStats& stats) {
    std::string md;
    md += "# Error Analysis Report\n\n";

    md += "## Validation Outcomes\n\n";
    md += "- Scripts: " + std::to_string(stats.total_scripts) + "\n";
    md += "- Technical validation pass rate: " + rate_text(stats.tv_pass, stats.total_scripts) + "\n";
    if (stats.iv_known) {
        md += "- Intent validation pass rate (on TV passes): " +
              rate_text(stats.iv_pass, stats.tv_pass) + "\n";
        md += "- Overall success rate: " + rate_text(stats.overall_success, stats.total_scripts) +
              "\n";
        md += "- Failure stages: technical " + std::to_string(stats.tv_fail) + ", intent " +
              std::to_string(stats.iv_fail) + "\n\n";
    } else {
        md += "- Intent validation: not available (no outcome store supplied)\n";
        md += "- Failure stages: technical " + std::to_string(stats.tv_fail) + "\n\n";
    }

    md += "## Technical Errors per Script\n\n";
    md += "- Scripts with errors: " + std::to_string(stats.errors_per_script.size()) + "\n";
    md += "- Total technical errors: " + std::to_string(stats.total_errors) + "\n";
    md += "- Mean errors per failed script: " + fmt2(stats.mean_errors) + "\n";
    md += "- Median: " + fmt1(stats.median_errors) + "\n";
    md += "- Max: " + std::to_string(stats.max_errors) + "\n\n";

    md += "## Cross-Distribution (Dim 1 x Dim 2, % of technical errors)\n\n";
    md += "| Category | Subcategory | FI | SD | CRF | Inc | Row Total |\n";
    md += "|---|---|---:|---:|---:|---:|---:|\n";
    for (const auto& row : stats.cross) {
        if (row.row_total() == 0 && row.subcategory == "Unknown") continue;
        md += "| " + std::string(to_string(row.category)) + " | " + row.subcategory + " | ";
        for (long long count : row.counts) {
            md += fmt1(stats.cell_percent(count)) + " | ";
        }
        md += fmt1(stats.cell_percent(row.row_total())) + " |\n";
    }
    md += "| **Column Total** | | ";
    long long grand = 0;
    for (long long total : stats.dim2_totals) grand += total;
    for (long long total : stats.dim2_totals) md += fmt1(stats.cell_percent(total)) + " | ";
    md += fmt1(stats.cell_percent(grand)) + " |\n\n";

    md += "## Dim-2 Totals (counts)\n\n";
    md += "- Factual Incorrectness: " + std::to_string(stats.dim2_totals[0]) + "\n";
    md += "- Structural Deficit: " + std::to_string(stats.dim2_totals[1]) + "\n";
    md += "- Contextual Reasoning Failure: " + std::to_string(stats.dim2_totals[2]) + "\n";
    md += "- Incompleteness: " + std::to_string(stats.dim2_totals[3]) + "\n";
    return md;
}

std::string render_errors_csv(const std::vector<ErrorRecord>& records) {
    std::string out =
        "script_id,category,subcategory,atomic_label,dim2,attribution,file,line,message,manual_override\n";
    for (const auto& record : records) {
        std::string excerpt = text::collapse_whitespace(record.error.raw_message);
        if (excerpt.size() > 200) excerpt = excerpt.substr(0, 200);
        out += csv::join_row(
            {record.error.script_id, to_string(record.label.category), record.label.subcategory,
             record.label.atomic_label, to_string(record.label.dim2),
             record.attribution ? to_string(*record.attribution) : "",
             record.error.location ? record.error.location->file : "",
             record.error.location ? std::to_string(record.error.location->line) : "", excerpt,
             record.manual_override});
    }
    return out;
}

void emit_reports(const CorpusErrorStats& stats, const std::vector<ErrorRecord>& records,
                  const std::filesystem::path& out_dir) {
    fs::write_file(out_dir / "report.md", render_error_report(stats));
    fs::write_file(out_dir / "errors.csv", render_errors_csv(records));
}

} // namespace iacbench::analyze
