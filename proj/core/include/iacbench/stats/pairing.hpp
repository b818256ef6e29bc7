#pragma once

#include <map>
#include <string>
#include <vector>

#include "iacbench/stats/mcnemar.hpp"

namespace iacbench::stats {

// Minimal view of one prompt's validation result, decoupled from the harness
// record format. iv_pass is meaningful only when tv_pass is true.
struct PromptOutcome {
    bool tv_pass = false;
    bool iv_pass = false;

    bool overall() const { return tv_pass && iv_pass; }
};

struct MethodOutcomes {
    std::string label;
    std::map<std::string, PromptOutcome> by_prompt;
};

enum class Stage { Tv, Overall };

// Counts joint pass/fail pairs at the chosen stage. Both outcome sets must
// cover the identical prompt-id set; a mismatch raises PairingError listing
// the symmetric difference.
ContingencyTable paired_table(const MethodOutcomes& first, const MethodOutcomes& second, Stage stage);

struct MatchedIvResult {
    ContingencyTable table;
    McNemarResult test;
    std::size_t matched_subset_size = 0;
    bool not_applicable = false; // empty matched subset
};

// Restricts to prompts passing technical validation under both methods,
// then applies McNemar's test to intent-validation outcomes on that subset.
MatchedIvResult matched_iv_compare(const MethodOutcomes& first, const MethodOutcomes& second,
                                   bool continuity_correction = false);

} // namespace iacbench::stats
