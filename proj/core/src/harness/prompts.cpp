#include "iacbench/harness/prompts.hpp"

#include <algorithm>
#include <set>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::harness {

std::vector<PromptCase> load_prompt_set(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError("prompt set: not a directory: " + dir.string());
    }
    std::vector<PromptCase> cases;
    std::set<std::string> seen;
    std::vector<std::filesystem::path> entries;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_directory()) entries.push_back(entry.path());
    }
    std::sort(entries.begin(), entries.end());

    for (const auto& case_dir : entries) {
        std::filesystem::path prompt_file = case_dir / "prompt.txt";
        if (!std::filesystem::exists(prompt_file)) continue;
        PromptCase c;
        c.prompt_id = case_dir.filename().string();
        if (!seen.insert(c.prompt_id).second) {
            throw ConfigError("prompt set: duplicate prompt id " + c.prompt_id);
        }
        c.request = fs::read_file(prompt_file);
        for (const char* name : {"policy.rego", "policy.txt"}) {
            if (std::filesystem::exists(case_dir / name)) {
                c.policy_path = case_dir / name;
                break;
            }
        }
        if (std::filesystem::is_directory(case_dir / "reference")) {
            c.reference_dir = case_dir / "reference";
        }
        cases.push_back(std::move(c));
    }
    if (cases.empty()) throw ConfigError("prompt set: no cases under " + dir.string());
    return cases;
}

} // namespace iacbench::harness
