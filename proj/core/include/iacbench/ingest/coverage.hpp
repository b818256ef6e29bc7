#pragma once

#include <string>
#include <vector>

#include "iacbench/ingest/enrich.hpp"

namespace iacbench::ingest {

struct CoverageCounter {
    long long matched = 0;
    long long total = 0;

    bool applicable() const { return total > 0; }
    double percent() const { return total == 0 ? 0.0 : 100.0 * static_cast<double>(matched) / static_cast<double>(total); }
};

// Documentation-field coverage. `overall` aggregates the argument fields
// (top-level plus block-level); attribute coverage is reported separately.
struct CoverageReport {
    CoverageCounter top_level_args;
    CoverageCounter block_level_args;
    CoverageCounter attributes;
    CoverageCounter overall;
};

CoverageReport compute_coverage(const std::vector<EnrichedResourceSchema>& schemas);

std::string render_coverage_markdown(const CoverageReport& report);
std::string coverage_to_json(const CoverageReport& report);

} // namespace iacbench::ingest
