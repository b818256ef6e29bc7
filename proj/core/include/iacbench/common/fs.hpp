#pragma once

#include <filesystem>
#include <string>

namespace iacbench::fs {

std::string read_file(const std::filesystem::path& path);

// Writes via a temporary sibling file and renames into place, so readers never
// observe a partially written record.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace iacbench::fs
