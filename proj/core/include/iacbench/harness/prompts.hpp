#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace iacbench::harness {

// One benchmark case: a directory holding prompt.txt, a policy file for
// intent validation, and optionally reference/ with a known-good script.
struct PromptCase {
    std::string prompt_id; // directory name; unique within a set
    std::string request;
    std::filesystem::path policy_path;        // empty when the case ships no policy
    std::filesystem::path reference_dir;      // empty when absent
};

// Cases sorted by prompt_id. Raises ConfigError on duplicate ids or when the
// directory holds no cases.
std::vector<PromptCase> load_prompt_set(const std::filesystem::path& dir);

} // namespace iacbench::harness
