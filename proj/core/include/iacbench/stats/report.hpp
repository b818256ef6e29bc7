#pragma once

#include <string>
#include <vector>

#include "iacbench/stats/cd_diagram.hpp"
#include "iacbench/stats/mcnemar.hpp"

namespace iacbench::stats {

struct ComparisonRow {
    std::string method1;
    std::string method2;
    std::string stage; // "tv", "overall" or "matched-iv"
    ContingencyTable table;
    McNemarResult test;
    bool adjusted_significant = false;
    double adjusted_alpha = 0.0;
    std::size_t matched_subset = 0; // matched-iv only
};

// Markdown pairwise-comparison table in the layout of the McNemar results
// tables (comparison, test, chi^2, p-value, odds ratio, significance).
std::string render_stats_markdown(const std::vector<ComparisonRow>& rows,
                                  const std::vector<MethodSummary>& summaries, double alpha);

std::string render_pairs_csv(const std::vector<ComparisonRow>& rows);

} // namespace iacbench::stats
