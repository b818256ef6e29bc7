#include "iacbench/harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/harness/validate.hpp"
#include "iacbench/index/chunk_index.hpp"
#include "iacbench/index/node_index.hpp"
#include "iacbench/kg/io.hpp"
#include "iacbench/retrieval/strategy.hpp"

namespace iacbench::harness {

namespace {

using retrieval::StrategyId;

struct LoadedStores {
    std::optional<kg::ConfigKnowledgeGraph> graph;
    std::optional<index::ChunkIndex> chunk_index;
    std::optional<index::NodeIndex> raw_node_index;
    std::optional<index::NodeIndex> summary_node_index;

    retrieval::StrategyStores view() const {
        retrieval::StrategyStores stores;
        if (graph) stores.graph = &*graph;
        if (chunk_index) stores.chunk_index = &*chunk_index;
        if (raw_node_index) stores.raw_node_index = &*raw_node_index;
        if (summary_node_index) stores.summary_node_index = &*summary_node_index;
        return stores;
    }
};

LoadedStores load_stores(const ExperimentConfig& config) {
    LoadedStores stores;
    auto embedder = providers::make_embedding_provider(config.embedding_provider);
    const StrategyId s = config.strategy;
    const bool graph_based = s == StrategyId::GrBase || s == StrategyId::GrOptMatch ||
                             s == StrategyId::GrLlmSum || s == StrategyId::GrRef;
    try {
        if (s != StrategyId::NoRag) {
            if (config.chunk_index_path.empty()) {
                throw ConfigError("strategy needs chunk_index");
            }
            stores.chunk_index = index::load_chunk_index(config.chunk_index_path, embedder);
        }
        if (graph_based) {
            if (config.graph_path.empty()) throw ConfigError("strategy needs graph");
            stores.graph = kg::load_graph(config.graph_path);
        }
        if (s == StrategyId::GrOptMatch) {
            if (config.node_index_raw_path.empty()) throw ConfigError("strategy needs node_index_raw");
            stores.raw_node_index = index::load_node_index(config.node_index_raw_path, embedder);
        }
        if (s == StrategyId::GrLlmSum) {
            if (config.node_index_summary_path.empty()) {
                throw ConfigError("strategy needs node_index_summary");
            }
            stores.summary_node_index = index::load_node_index(config.node_index_summary_path, embedder);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("failed to load stores: ") + e.what());
    }
    return stores;
}

std::string timestamp_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_manifest(const ExperimentConfig& config, const std::string& started,
                    std::size_t prompt_count, providers::GenerationProvider& generator) {
    nlohmann::json manifest;
    manifest["name"] = config.experiment_name;
    manifest["strategy"] = retrieval::to_string(config.strategy);
    manifest["config_hash"] = config_hash(config);
    manifest["generation_provider"] = generator.model_id();
    manifest["embedding_provider"] = config.embedding_provider;
    manifest["validator_mode"] =
        config.validator_mode == ValidatorMode::Stubbed ? "stubbed" : "external-tools";
    manifest["prompt_count"] = prompt_count;
    manifest["started_at"] = started;
    manifest["updated_at"] = timestamp_now();
    fs::write_file_atomic(std::filesystem::path(config.output_dir) / "experiment.json",
                          manifest.dump(2) + "\n");
}

void check_resumable(const ExperimentConfig& config) {
    std::filesystem::path manifest_path = config.output_dir / "experiment.json";
    if (!std::filesystem::exists(manifest_path)) return;
    nlohmann::json manifest = nlohmann::json::parse(fs::read_file(manifest_path), nullptr, false);
    if (manifest.is_discarded()) throw ConfigError("corrupt manifest: " + manifest_path.string());
    std::string previous = manifest.value("config_hash", "");
    if (previous != config_hash(config)) {
        throw ConfigError("output dir holds a different experiment (config hash mismatch); "
                          "choose a fresh output_dir or matching config");
    }
}

} // namespace

RunReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
    auto cases = load_prompt_set(config.prompt_set);
    check_resumable(config);

    LoadedStores stores = load_stores(config);
    auto generator = providers::make_generation_provider(config.generation_provider);

    std::filesystem::create_directories(config.output_dir / "outcomes");
    std::filesystem::create_directories(config.output_dir / "logs");
    std::filesystem::create_directories(config.output_dir / "artifacts");
    std::filesystem::create_directories(config.output_dir / "work");

    const std::string started = timestamp_now();
    write_manifest(config, started, cases.size(), *generator);

    ExternalTools tools;
    tools.terraform_bin = config.terraform_bin;
    tools.policy_eval_bin = config.policy_eval_bin;
    tools.policy_decision = config.policy_decision;
    tools.endpoint_override_file = config.endpoint_override_file;
    tools.plugin_cache_dir = config.output_dir / "plugin-cache";
    tools.timeout = std::chrono::milliseconds(config.validation_timeout_seconds * 1000LL);

    retrieval::StrategyOptions strategy_options;
    strategy_options.reference_depth = config.reference_depth;

    RunReport report;
    report.total_prompts = cases.size();

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> processed{0};
    std::atomic<std::size_t> skipped{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            const PromptCase& prompt = cases[i];

            std::filesystem::path outcome_path =
                config.output_dir / "outcomes" / (prompt.prompt_id + ".json");
            if (std::filesystem::exists(outcome_path)) {
                skipped.fetch_add(1);
                continue;
            }
            if (options.limit > 0) {
                // reserve a processing slot; put the prompt back if over limit
                std::size_t slot = processed.fetch_add(1);
                if (slot >= options.limit) {
                    processed.fetch_sub(1);
                    return;
                }
            } else {
                processed.fetch_add(1);
            }

            ValidationOutcome outcome;
            outcome.script_id = prompt.prompt_id;
            std::filesystem::path work_dir = config.output_dir / "work" / prompt.prompt_id;
            std::filesystem::create_directories(work_dir);

            bool generated = false;
            try {
                auto run = retrieval::run_strategy(config.strategy, prompt.request, stores.view(),
                                                   *generator, strategy_options);
                fs::write_file(work_dir / "main.tf", run.generated_code);
                fs::write_file(config.output_dir / "artifacts" / (prompt.prompt_id + ".prompt.txt"),
                               run.prompt);
                nlohmann::json telemetry;
                telemetry["strategy"] = retrieval::to_string(run.context.strategy);
                telemetry["resources"] = run.context.resources;
                telemetry["token_count"] = run.context.token_count;
                nlohmann::json prov = nlohmann::json::array();
                for (const auto& [kind, id] : run.context.provenance) prov.push_back({kind, id});
                telemetry["provenance"] = prov;
                fs::write_file(config.output_dir / "artifacts" / (prompt.prompt_id + ".context.json"),
                               telemetry.dump(2) + "\n");
                generated = true;
            } catch (const std::exception& e) {
                outcome.tv_status = StageStatus::Fail;
                outcome.iv_status = StageStatus::NotRun;
                outcome.tv_log = std::string("generation error: ") + e.what();
            }

            if (generated) {
                StageResult tv = config.validator_mode == ValidatorMode::Stubbed
                                     ? technical_validate_stub(work_dir)
                                     : technical_validate_external(work_dir, tools);
                outcome.tv_status = tv.pass ? StageStatus::Pass : StageStatus::Fail;
                outcome.tv_log = tv.log;
                if (tv.pass) {
                    StageResult iv = config.validator_mode == ValidatorMode::Stubbed
                                         ? intent_validate_stub(work_dir, config.stub_iv_marker)
                                         : intent_validate_external(work_dir, prompt.policy_path, tools);
                    outcome.iv_status = iv.pass ? StageStatus::Pass : StageStatus::Fail;
                    outcome.iv_log = iv.log;
                } else {
                    outcome.iv_status = StageStatus::NotRun;
                }
            }

            std::string tv_log_rel = "logs/" + prompt.prompt_id + ".tv.log";
            std::string iv_log_rel;
            fs::write_file(config.output_dir / tv_log_rel, outcome.tv_log);
            if (outcome.iv_status != StageStatus::NotRun) {
                iv_log_rel = "logs/" + prompt.prompt_id + ".iv.log";
                fs::write_file(config.output_dir / iv_log_rel, outcome.iv_log);
            }
            fs::write_file_atomic(outcome_path, outcome_to_json(outcome, tv_log_rel, iv_log_rel));

            if (options.on_progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                options.on_progress(prompt.prompt_id + " " + outcome.overall());
            }
        }
    };

    std::size_t threads = static_cast<std::size_t>(config.parallelism);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    write_manifest(config, started, cases.size(), *generator);

    report.processed = processed.load();
    report.skipped = skipped.load();
    report.summary = summarize(load_outcomes(config.output_dir, config.experiment_name));
    return report;
}

} // namespace iacbench::harness
