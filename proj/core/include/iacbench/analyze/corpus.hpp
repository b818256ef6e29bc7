#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "iacbench/analyze/taxonomy.hpp"
#include "iacbench/stats/pairing.hpp"

namespace iacbench::analyze {

// One cross-distribution cell per (subcategory, Dim-2 pattern).
using Dim2Counts = std::array<long long, 4>; // indexed by Dim2Pattern

struct CrossRow {
    Dim1Category category = Dim1Category::Schema;
    std::string subcategory;
    Dim2Counts counts{};

    long long row_total() const;
};

struct CorpusErrorStats {
    // technical errors only; intent-stage records are excluded here
    long long total_errors = 0;
    std::map<std::string, long long> errors_per_script;
    double mean_errors = 0.0;
    double median_errors = 0.0;
    long long max_errors = 0;

    std::vector<CrossRow> cross; // fixed subcategory order
    Dim2Counts dim2_totals{};

    // stage totals from validation outcomes
    long long total_scripts = 0;
    long long tv_pass = 0;
    long long tv_fail = 0;
    long long iv_pass = 0;
    long long iv_fail = 0;
    long long overall_success = 0;
    // false when stage totals were inferred from logs alone (no outcome
    // store): intent figures are then unknown, not zero
    bool iv_known = true;

    double cell_percent(long long count) const;
};

// Aggregates per-script counts, mean/median/max, the Dim1 x Dim2
// cross-distribution and stage pass/fail totals. Intent-validation records
// never count toward technical error statistics.
CorpusErrorStats corpus_stats(const std::vector<ErrorRecord>& records,
                              const std::map<std::string, stats::PromptOutcome>& outcomes);

} // namespace iacbench::analyze
