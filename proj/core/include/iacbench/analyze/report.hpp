#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "iacbench/analyze/corpus.hpp"

namespace iacbench::analyze {

std::string render_error_report(const CorpusErrorStats& stats);

// One row per record: script_id, category, subcategory, atomic_label, dim2,
// attribution, file, line, message excerpt, manual_override. RFC-4180 quoting;
// byte-stable given identical input (records are emitted in input order).
std::string render_errors_csv(const std::vector<ErrorRecord>& records);

// Writes report.md and errors.csv under out_dir.
void emit_reports(const CorpusErrorStats& stats, const std::vector<ErrorRecord>& records,
                  const std::filesystem::path& out_dir);

} // namespace iacbench::analyze
