#pragma once

#include <functional>
#include <optional>

#include "iacbench/harness/config.hpp"
#include "iacbench/harness/outcome.hpp"
#include "iacbench/harness/prompts.hpp"

namespace iacbench::harness {

struct RunOptions {
    // Stop after this many newly processed prompts (already-completed prompts
    // do not count); 0 means no limit. Supports interruption/resume testing
    // and incremental runs.
    std::size_t limit = 0;
    std::function<void(const std::string&)> on_progress; // optional progress sink
};

struct RunReport {
    std::size_t processed = 0;
    std::size_t skipped = 0; // completed in an earlier run
    std::size_t total_prompts = 0;
    StageSummary summary; // over all persisted outcomes
};

// Runs the experiment end to end: for every prompt, generation via the
// configured strategy and provider, script write, technical validation, then
// intent validation on TV pass; outcomes persist one record per prompt with
// atomic writes. Reruns skip prompts whose outcome records exist. Per-prompt
// failures are recorded as outcomes, never aborting the run.
RunReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

} // namespace iacbench::harness
