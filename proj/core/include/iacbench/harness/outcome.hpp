#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "iacbench/stats/pairing.hpp"

namespace iacbench::harness {

enum class StageStatus { Pass, Fail, NotRun };

const char* to_string(StageStatus s);
StageStatus stage_status_from_string(const std::string& s);

// Invariants: iv_status == NotRun exactly when tv_status == Fail;
// overall is Success exactly when both stages pass.
struct ValidationOutcome {
    std::string script_id;
    StageStatus tv_status = StageStatus::Fail;
    StageStatus iv_status = StageStatus::NotRun;
    std::string tv_log;
    std::string iv_log;

    bool success() const { return tv_status == StageStatus::Pass && iv_status == StageStatus::Pass; }
    std::string overall() const { return success() ? "Success" : "Failed"; }
    std::string failure_stage() const;
    void check_invariants() const; // raises Error on violation
};

// Outcome record serialization. The record carries status fields plus log
// paths; log text lives in sibling files so records stay byte-stable.
std::string outcome_to_json(const ValidationOutcome& outcome, const std::string& tv_log_path,
                            const std::string& iv_log_path);

struct StoredOutcome {
    ValidationOutcome outcome; // logs not loaded
    std::string tv_log_path;
    std::string iv_log_path;
};
StoredOutcome outcome_from_json(const std::string& json_text);

// Loads an experiment's outcome store into the pairing view used by the
// stats module. The method label defaults to the manifest's experiment name.
stats::MethodOutcomes load_outcomes(const std::filesystem::path& experiment_dir,
                                    const std::string& label_override = "");

struct StageSummary {
    long long total = 0;
    long long tv_pass = 0;
    long long iv_pass = 0; // equals overall successes by the gating invariant

    double tv_rate() const;
    bool iv_rate_applicable() const { return tv_pass > 0; }
    double iv_on_tv_rate() const; // meaningful only when applicable
    double overall_rate() const;
};

StageSummary summarize(const stats::MethodOutcomes& outcomes);
std::string render_summary(const StageSummary& summary, const std::string& label);

} // namespace iacbench::harness
