#include "iacbench/harness/outcome.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"

namespace iacbench::harness {

const char* to_string(StageStatus s) {
    switch (s) {
    case StageStatus::Pass:
        return "pass";
    case StageStatus::Fail:
        return "fail";
    case StageStatus::NotRun:
        return "not-run";
    }
    return "?";
}

StageStatus stage_status_from_string(const std::string& s) {
    if (s == "pass") return StageStatus::Pass;
    if (s == "fail") return StageStatus::Fail;
    if (s == "not-run") return StageStatus::NotRun;
    throw ParseError("unknown stage status: " + s);
}

std::string ValidationOutcome::failure_stage() const {
    if (success()) return "none";
    if (tv_status == StageStatus::Fail) return "technical";
    return "intent";
}

void ValidationOutcome::check_invariants() const {
    bool iv_not_run = iv_status == StageStatus::NotRun;
    bool tv_failed = tv_status == StageStatus::Fail;
    if (iv_not_run != tv_failed) {
        throw Error("outcome invariant violated for " + script_id +
                    ": iv_status must be not-run exactly when tv_status is fail");
    }
}

std::string outcome_to_json(const ValidationOutcome& outcome, const std::string& tv_log_path,
                            const std::string& iv_log_path) {
    outcome.check_invariants();
    nlohmann::json j;
    j["script_id"] = outcome.script_id;
    j["tv_status"] = to_string(outcome.tv_status);
    j["iv_status"] = to_string(outcome.iv_status);
    j["overall"] = outcome.overall();
    j["failure_stage"] = outcome.failure_stage();
    j["tv_log"] = tv_log_path;
    j["iv_log"] = iv_log_path;
    return j.dump(2) + "\n";
}

StoredOutcome outcome_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("outcome record: invalid JSON");
    StoredOutcome stored;
    stored.outcome.script_id = j.at("script_id").get<std::string>();
    stored.outcome.tv_status = stage_status_from_string(j.at("tv_status").get<std::string>());
    stored.outcome.iv_status = stage_status_from_string(j.at("iv_status").get<std::string>());
    stored.tv_log_path = j.value("tv_log", "");
    stored.iv_log_path = j.value("iv_log", "");
    stored.outcome.check_invariants();
    return stored;
}

stats::MethodOutcomes load_outcomes(const std::filesystem::path& experiment_dir,
                                    const std::string& label_override) {
    stats::MethodOutcomes method;
    method.label = label_override;

    std::filesystem::path manifest_path = experiment_dir / "experiment.json";
    if (method.label.empty() && std::filesystem::exists(manifest_path)) {
        nlohmann::json manifest = nlohmann::json::parse(fs::read_file(manifest_path), nullptr, false);
        if (!manifest.is_discarded() && manifest.contains("name")) {
            method.label = manifest["name"].get<std::string>();
        }
    }
    if (method.label.empty()) method.label = experiment_dir.filename().string();

    std::filesystem::path outcomes_dir = experiment_dir / "outcomes";
    if (!std::filesystem::is_directory(outcomes_dir)) {
        throw ConfigError("no outcomes directory under " + experiment_dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(outcomes_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        StoredOutcome stored = outcome_from_json(fs::read_file(file));
        stats::PromptOutcome view;
        view.tv_pass = stored.outcome.tv_status == StageStatus::Pass;
        view.iv_pass = stored.outcome.iv_status == StageStatus::Pass;
        method.by_prompt[stored.outcome.script_id] = view;
    }
    return method;
}

double StageSummary::tv_rate() const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(tv_pass) / static_cast<double>(total);
}

double StageSummary::iv_on_tv_rate() const {
    return tv_pass == 0 ? 0.0 : 100.0 * static_cast<double>(iv_pass) / static_cast<double>(tv_pass);
}

double StageSummary::overall_rate() const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(iv_pass) / static_cast<double>(total);
}

StageSummary summarize(const stats::MethodOutcomes& outcomes) {
    StageSummary summary;
    summary.total = static_cast<long long>(outcomes.by_prompt.size());
    for (const auto& [_, outcome] : outcomes.by_prompt) {
        if (outcome.tv_pass) {
            ++summary.tv_pass;
            if (outcome.iv_pass) ++summary.iv_pass;
        }
    }
    return summary;
}

std::string render_summary(const StageSummary& summary, const std::string& label) {
    char buf[64];
    std::string out = "Experiment: " + label + "\n";
    std::snprintf(buf, sizeof(buf), "%.1f%% (%lld/%lld)", summary.tv_rate(), summary.tv_pass,
                  summary.total);
    out += "TV pass rate: " + std::string(buf) + "\n";
    if (summary.iv_rate_applicable()) {
        std::snprintf(buf, sizeof(buf), "%.1f%% (%lld/%lld)", summary.iv_on_tv_rate(),
                      summary.iv_pass, summary.tv_pass);
        out += "IV pass rate (on TV passes): " + std::string(buf) + "\n";
    } else {
        out += "IV pass rate (on TV passes): n/a (no TV passes)\n";
    }
    std::snprintf(buf, sizeof(buf), "%.1f%% (%lld/%lld)", summary.overall_rate(), summary.iv_pass,
                  summary.total);
    out += "Overall success rate: " + std::string(buf) + "\n";
    return out;
}

} // namespace iacbench::harness
