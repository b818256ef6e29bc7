#include "iacbench/analyze/corpus.hpp"

#include <algorithm>

namespace iacbench::analyze {

long long CrossRow::row_total() const {
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

double CorpusErrorStats::cell_percent(long long count) const {
    if (total_errors == 0) return 0.0;
    return 100.0 * static_cast<double>(count) / static_cast<double>(total_errors);
}

CorpusErrorStats corpus_stats(const std::vector<ErrorRecord>& records,
                              const std::map<std::string, stats::PromptOutcome>& outcomes) {
    CorpusErrorStats result;

    // cross rows in the taxonomy's subcategory order (technical categories)
    std::map<std::string, std::size_t> row_index;
    for (const auto& label : taxonomy_table()) {
        if (label.category == Dim1Category::Intent || label.subcategory == "Unknown") continue;
        if (row_index.count(label.subcategory)) continue;
        row_index[label.subcategory] = result.cross.size();
        result.cross.push_back({label.category, label.subcategory, {}});
    }
    row_index["Unknown"] = result.cross.size();
    result.cross.push_back({Dim1Category::Schema, "Unknown", {}});

    for (const auto& record : records) {
        if (record.label.category == Dim1Category::Intent) continue;
        ++result.total_errors;
        ++result.errors_per_script[record.error.script_id];
        auto it = row_index.find(record.label.subcategory);
        std::size_t row = it == row_index.end() ? row_index["Unknown"] : it->second;
        ++result.cross[row].counts[static_cast<std::size_t>(record.label.dim2)];
        ++result.dim2_totals[static_cast<std::size_t>(record.label.dim2)];
    }

    if (!result.errors_per_script.empty()) {
        std::vector<long long> counts;
        counts.reserve(result.errors_per_script.size());
        for (const auto& [_, n] : result.errors_per_script) counts.push_back(n);
        std::sort(counts.begin(), counts.end());
        result.max_errors = counts.back();
        result.mean_errors =
            static_cast<double>(result.total_errors) / static_cast<double>(counts.size());
        std::size_t mid = counts.size() / 2;
        result.median_errors = counts.size() % 2 == 1
                                   ? static_cast<double>(counts[mid])
                                   : (static_cast<double>(counts[mid - 1]) +
                                      static_cast<double>(counts[mid])) /
                                         2.0;
    }

    result.total_scripts = static_cast<long long>(outcomes.size());
    for (const auto& [_, outcome] : outcomes) {
        if (outcome.tv_pass) {
            ++result.tv_pass;
            if (outcome.iv_pass) {
                ++result.iv_pass;
                ++result.overall_success;
            } else {
                ++result.iv_fail;
            }
        } else {
            ++result.tv_fail;
        }
    }
    return result;
}

} // namespace iacbench::analyze
