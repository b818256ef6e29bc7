#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "iacbench/retrieval/prompt.hpp"

namespace iacbench::harness {

enum class ValidatorMode { ExternalTools, Stubbed };

struct ExperimentConfig {
    std::string experiment_name;
    retrieval::StrategyId strategy = retrieval::StrategyId::NoRag;
    std::filesystem::path prompt_set;
    std::filesystem::path output_dir;

    // stores (only those the strategy needs must exist)
    std::filesystem::path graph_path;
    std::filesystem::path chunk_index_path;
    std::filesystem::path node_index_raw_path;
    std::filesystem::path node_index_summary_path;

    std::string embedding_provider = "test";
    std::string generation_provider = "echo";

    ValidatorMode validator_mode = ValidatorMode::Stubbed;
    std::string stub_iv_marker = "INTENT_OK";

    // external-tool settings
    std::string terraform_bin = "terraform";
    std::string policy_eval_bin = "opa";
    std::string policy_decision = "data.main.allow";
    std::filesystem::path endpoint_override_file;
    int validation_timeout_seconds = 120;

    std::string cutoff_date = "2023-10";
    int parallelism = 4;
    int reference_depth = 2;
};

// Minimal key/value text config: one "key: value" per line, '#' comments.
// Unknown keys raise ConfigError; name and prompt_set are mandatory.
ExperimentConfig parse_experiment_config(const std::string& content,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Hash over the semantically relevant fields; recorded in the manifest and
// checked on resume.
std::string config_hash(const ExperimentConfig& config);

} // namespace iacbench::harness
