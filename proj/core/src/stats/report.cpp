#include "iacbench/stats/report.hpp"

#include <cstdio>

#include "iacbench/common/csv.hpp"

namespace iacbench::stats {

namespace {

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string p_text(const McNemarResult& r) {
    if (r.not_applicable) return "n/a";
    if (r.p_value < 0.001) return "< 0.001";
    return fmt(r.p_value, "%.3f");
}

} // namespace

std::string render_stats_markdown(const std::vector<ComparisonRow>& rows,
                                  const std::vector<MethodSummary>& summaries, double alpha) {
    std::string md;
    md += "# Pairwise Statistical Comparison\n\n";
    md += "## Method Summaries\n\n";
    md += "| Method | Passes | Total | Rate (%) |\n";
    md += "|---|---:|---:|---:|\n";
    for (const auto& s : summaries) {
        md += "| " + s.name + " | " + std::to_string(s.passes) + " | " + std::to_string(s.total) +
              " | " + fmt(s.rate() * 100.0, "%.1f") + " |\n";
    }
    md += "\n## McNemar's Test Results for Pairwise Comparisons\n\n";
    md += "alpha = " + fmt(alpha, "%.3f");
    if (!rows.empty() && rows.front().adjusted_alpha > 0.0) {
        md += ", Bonferroni-adjusted alpha = " + fmt(rows.front().adjusted_alpha, "%.5f");
    }
    md += "\n\n";
    md += "| Comparison | Test | a | b | c | d | chi^2 | p-value | Odds Ratio | Significant (raw) | "
          "Significant (adjusted) |\n";
    md += "|---|---|---:|---:|---:|---:|---:|---:|---:|---|---|\n";
    for (const auto& row : rows) {
        std::string test_label = row.stage;
        if (row.stage == "matched-iv") {
            test_label += " (n=" + std::to_string(row.matched_subset) + ")";
        }
        md += "| " + row.method1 + " vs. " + row.method2 + " | " + test_label + " | " +
              std::to_string(row.table.a) + " | " + std::to_string(row.table.b) + " | " +
              std::to_string(row.table.c) + " | " + std::to_string(row.table.d) + " | " +
              (row.test.not_applicable ? "n/a" : fmt(row.test.chi_squared, "%.2f")) + " | " +
              p_text(row.test) + " | " + row.test.odds_ratio_text() + " | " +
              (row.test.not_applicable ? "n/a" : (row.test.p_value <= alpha ? "yes" : "no")) + " | " +
              (row.test.not_applicable ? "n/a" : (row.adjusted_significant ? "yes" : "no")) + " |\n";
    }
    return md;
}

std::string render_pairs_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = "method1,method2,stage,a,b,c,d,chi_squared,p_value,odds_ratio,odds_ratio_flag,"
                      "raw_significant,adjusted_significant,adjusted_alpha,matched_subset\n";
    for (const auto& row : rows) {
        std::string or_flag;
        switch (row.test.or_kind) {
        case OddsRatioKind::Finite:
            or_flag = "finite";
            break;
        case OddsRatioKind::Infinite:
            or_flag = "infinite";
            break;
        case OddsRatioKind::Zero:
            or_flag = "zero";
            break;
        case OddsRatioKind::Undefined:
            or_flag = "undefined";
            break;
        }
        char chi[32];
        std::snprintf(chi, sizeof(chi), "%.6f", row.test.chi_squared);
        char p[32];
        std::snprintf(p, sizeof(p), "%.9g", row.test.p_value);
        char aa[32];
        std::snprintf(aa, sizeof(aa), "%.9g", row.adjusted_alpha);
        std::string or_text = row.test.or_kind == OddsRatioKind::Finite
                                  ? fmt(row.test.odds_ratio, "%.6f")
                                  : row.test.odds_ratio_text();
        out += csv::join_row({row.method1, row.method2, row.stage, std::to_string(row.table.a),
                              std::to_string(row.table.b), std::to_string(row.table.c),
                              std::to_string(row.table.d), chi, p, or_text, or_flag,
                              row.test.not_applicable ? "n/a" : (row.test.p_value <= 0.05 ? "yes" : "no"),
                              row.test.not_applicable ? "n/a" : (row.adjusted_significant ? "yes" : "no"),
                              aa, std::to_string(row.matched_subset)});
    }
    return out;
}

} // namespace iacbench::stats
