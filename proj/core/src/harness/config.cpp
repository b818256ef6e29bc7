#include "iacbench/harness/config.hpp"

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::harness {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    std::filesystem::path p(value);
    if (p.is_absolute() || base.empty()) return p;
    return base / p;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& content,
                                         const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    bool saw_name = false;
    bool saw_prompts = false;

    for (const auto& raw_line : text::split_lines(content)) {
        std::string line = text::trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("experiment config: expected \"key: value\", got: " + line);
        }
        std::string key = text::trim(line.substr(0, colon));
        std::string value = text::trim(line.substr(colon + 1));

        if (key == "name") {
            config.experiment_name = value;
            saw_name = true;
        } else if (key == "strategy") {
            config.strategy = retrieval::strategy_from_string(value);
        } else if (key == "prompt_set") {
            config.prompt_set = resolve(base_dir, value);
            saw_prompts = true;
        } else if (key == "output_dir") {
            config.output_dir = resolve(base_dir, value);
        } else if (key == "graph") {
            config.graph_path = resolve(base_dir, value);
        } else if (key == "chunk_index") {
            config.chunk_index_path = resolve(base_dir, value);
        } else if (key == "node_index_raw") {
            config.node_index_raw_path = resolve(base_dir, value);
        } else if (key == "node_index_summary") {
            config.node_index_summary_path = resolve(base_dir, value);
        } else if (key == "embedding_provider") {
            config.embedding_provider = value;
        } else if (key == "generation_provider") {
            config.generation_provider = value;
        } else if (key == "validator_mode") {
            if (value == "external-tools")
                config.validator_mode = ValidatorMode::ExternalTools;
            else if (value == "stubbed")
                config.validator_mode = ValidatorMode::Stubbed;
            else
                throw ConfigError("experiment config: unknown validator_mode " + value);
        } else if (key == "stub_iv_marker") {
            config.stub_iv_marker = value;
        } else if (key == "terraform_bin") {
            config.terraform_bin = value;
        } else if (key == "policy_eval_bin") {
            config.policy_eval_bin = value;
        } else if (key == "policy_decision") {
            config.policy_decision = value;
        } else if (key == "endpoint_override_file") {
            config.endpoint_override_file = resolve(base_dir, value);
        } else if (key == "validation_timeout_seconds") {
            config.validation_timeout_seconds = std::stoi(value);
        } else if (key == "cutoff_date") {
            config.cutoff_date = value;
        } else if (key == "parallelism") {
            config.parallelism = std::stoi(value);
        } else if (key == "reference_depth") {
            config.reference_depth = std::stoi(value);
        } else {
            throw ConfigError("experiment config: unknown key " + key);
        }
    }

    if (!saw_name || config.experiment_name.empty()) {
        throw ConfigError("experiment config: missing experiment name");
    }
    if (!saw_prompts) throw ConfigError("experiment config: missing prompt_set");
    if (config.output_dir.empty()) {
        throw ConfigError("experiment config: missing output_dir");
    }
    if (config.parallelism < 1) throw ConfigError("experiment config: parallelism must be >= 1");
    return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    return parse_experiment_config(fs::read_file(path), path.parent_path());
}

std::string config_hash(const ExperimentConfig& config) {
    std::string repr = config.experiment_name + "|" + retrieval::to_string(config.strategy) + "|" +
                       config.prompt_set.string() + "|" + config.graph_path.string() + "|" +
                       config.chunk_index_path.string() + "|" + config.node_index_raw_path.string() +
                       "|" + config.node_index_summary_path.string() + "|" +
                       config.embedding_provider + "|" + config.generation_provider + "|" +
                       (config.validator_mode == ValidatorMode::Stubbed ? "stubbed" : "external") +
                       "|" + config.stub_iv_marker + "|" + config.cutoff_date;
    return text::fnv1a_hex(repr);
}

} // namespace iacbench::harness
