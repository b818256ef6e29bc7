#include "iacbench/ingest/coverage.hpp"

#include <cstdio>
#include <functional>

#include <nlohmann/json.hpp>

namespace iacbench::ingest {

namespace {

void count_block(const BlockSpec& block, CoverageCounter& counter) {
    for (const auto& arg : block.nested_arguments) {
        ++counter.total;
        if (!arg.description.empty()) ++counter.matched;
    }
    for (const auto& nested : block.nested_blocks) count_block(nested, counter);
}

std::string percent_text(const CoverageCounter& c) {
    if (!c.applicable()) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", c.percent());
    return buf;
}

} // namespace

CoverageReport compute_coverage(const std::vector<EnrichedResourceSchema>& schemas) {
    CoverageReport report;
    for (const auto& schema : schemas) {
        for (const auto& arg : schema.arguments) {
            ++report.top_level_args.total;
            if (!arg.description.empty()) ++report.top_level_args.matched;
        }
        for (const auto& block : schema.blocks) count_block(block, report.block_level_args);
        for (const auto& attr : schema.attributes) {
            ++report.attributes.total;
            if (!attr.description.empty()) ++report.attributes.matched;
        }
    }
    report.overall.matched = report.top_level_args.matched + report.block_level_args.matched;
    report.overall.total = report.top_level_args.total + report.block_level_args.total;
    return report;
}

std::string render_coverage_markdown(const CoverageReport& report) {
    std::string md;
    md += "# Documentation Coverage\n\n";
    md += "| Field class | Matched | Total | Coverage |\n";
    md += "|---|---:|---:|---:|\n";
    auto row = [&](const char* label, const CoverageCounter& c) {
        md += "| " + std::string(label) + " | " + std::to_string(c.matched) + " | " +
              std::to_string(c.total) + " | " + percent_text(c) + " |\n";
    };
    row("Top-level arguments", report.top_level_args);
    row("Block-level arguments", report.block_level_args);
    row("Attributes", report.attributes);
    row("Overall (argument fields)", report.overall);
    return md;
}

std::string coverage_to_json(const CoverageReport& report) {
    nlohmann::json j;
    auto put = [&](const char* key, const CoverageCounter& c) {
        nlohmann::json entry;
        entry["matched"] = c.matched;
        entry["total"] = c.total;
        if (c.applicable()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.1f", c.percent());
            entry["percent"] = buf;
        } else {
            entry["percent"] = nullptr;
        }
        j[key] = entry;
    };
    put("top_level_args", report.top_level_args);
    put("block_level_args", report.block_level_args);
    put("attributes", report.attributes);
    put("overall", report.overall);
    return j.dump(2) + "\n";
}

} // namespace iacbench::ingest
