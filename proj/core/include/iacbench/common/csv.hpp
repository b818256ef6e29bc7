#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace iacbench::csv {

// RFC-4180-style quoting: fields containing comma, quote or newline are
// wrapped in double quotes with embedded quotes doubled.
std::string quote_field(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

// Parses one CSV document. Handles quoted fields with embedded separators,
// doubled quotes and newlines.
std::vector<std::vector<std::string>> parse(std::string_view content);

} // namespace iacbench::csv
