#pragma once

#include <chrono>
#include <filesystem>
#include <string>

namespace iacbench::harness {

struct StageResult {
    bool pass = false;
    std::string log;
};

struct ExternalTools {
    std::string terraform_bin = "terraform";
    std::string policy_eval_bin = "opa";
    std::string policy_decision = "data.main.allow";
    std::filesystem::path endpoint_override_file; // copied into the work dir when set
    std::filesystem::path plugin_cache_dir;       // per-run cache, isolates prompts
    std::chrono::milliseconds timeout{120000};    // expiry counts as fail with a timeout marker
};

// External mode: runs the IaC tool's `init` then `plan` in script_dir, pass
// iff both exit zero; combined output captured; a timeout counts as fail with
// a "[timeout]" marker. Raises EnvironmentError when the binary is missing.
StageResult technical_validate_external(const std::filesystem::path& script_dir,
                                        const ExternalTools& tools);

// Stub mode: passes iff the directory's main.tf exists and is non-empty.
StageResult technical_validate_stub(const std::filesystem::path& script_dir);

// External mode: exports the machine-readable plan and evaluates the policy
// against it (`eval` with data + input + decision path); pass iff the
// decision is true. Must only be called after technical validation passed.
StageResult intent_validate_external(const std::filesystem::path& script_dir,
                                     const std::filesystem::path& policy_path,
                                     const ExternalTools& tools);

// Stub mode: passes iff main.tf contains the marker string.
StageResult intent_validate_stub(const std::filesystem::path& script_dir, const std::string& marker);

} // namespace iacbench::harness
