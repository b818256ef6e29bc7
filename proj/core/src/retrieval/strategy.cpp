#include "iacbench/retrieval/strategy.hpp"

#include <set>

#include "iacbench/common/errors.hpp"
#include "iacbench/kg/references.hpp"
#include "iacbench/kg/subgraph.hpp"

namespace iacbench::retrieval {

namespace {

void require_store(const void* store, const char* name) {
    if (!store) throw ConfigError(std::string("strategy requires missing store: ") + name);
}

} // namespace

std::vector<std::string> resolve_resources(const std::vector<index::ChunkHit>& chunk_hits) {
    std::vector<std::string> resources;
    std::set<std::string> seen;
    for (const auto& hit : chunk_hits) {
        const std::string& name = hit.chunk->resource_name;
        if (name.empty()) continue;
        if (seen.insert(name).second) resources.push_back(name);
    }
    return resources;
}

StrategyRun prepare_strategy(StrategyId strategy, const std::string& user_query,
                             const StrategyStores& stores, const StrategyOptions& options) {
    StrategyRun run;
    run.context.strategy = strategy;

    switch (strategy) {
    case StrategyId::NoRag:
        break;

    case StrategyId::NaiveRag: {
        require_store(stores.chunk_index, "chunk index");
        auto hits = index::query_chunks(*stores.chunk_index, user_query, options.top_k_chunks);
        // chunks concatenated in order of similarity rank
        for (const auto& hit : hits) {
            run.context.context_text += hit.chunk->text;
            run.context.context_text += "\n";
            run.context.provenance.emplace_back("chunk", hit.chunk->chunk_id);
        }
        run.context.resources = resolve_resources(hits);
        break;
    }

    case StrategyId::GrBase:
    case StrategyId::GrOptMatch:
    case StrategyId::GrLlmSum:
    case StrategyId::GrRef: {
        require_store(stores.chunk_index, "chunk index");
        require_store(stores.graph, "knowledge graph");
        const index::NodeIndex* node_index = nullptr;
        if (strategy == StrategyId::GrOptMatch) {
            require_store(stores.raw_node_index, "raw-description node index");
            node_index = stores.raw_node_index;
        } else if (strategy == StrategyId::GrLlmSum) {
            require_store(stores.summary_node_index, "summary node index");
            node_index = stores.summary_node_index;
        }

        auto hits = index::query_chunks(*stores.chunk_index, user_query, options.top_k_chunks);
        std::vector<std::string> seeds = resolve_resources(hits);

        std::vector<std::string> ordered = seeds;
        if (strategy == StrategyId::GrRef && !seeds.empty()) {
            ordered = kg::expand_references(*stores.graph, seeds, options.reference_depth);
        }

        std::vector<kg::ResourceSubgraph> subgraphs;
        std::set<std::string> seed_set(seeds.begin(), seeds.end());
        for (const auto& resource : ordered) {
            if (node_index) {
                auto selections = index::select_optional_elements(*node_index, resource, user_query,
                                                                  options.top_k_optional);
                subgraphs.push_back(kg::filtered_subgraph(*stores.graph, resource,
                                                          selections.optional_args,
                                                          selections.optional_blocks,
                                                          selections.example_title));
            } else {
                subgraphs.push_back(kg::base_subgraph(*stores.graph, resource));
            }
            if (strategy == StrategyId::GrRef && seed_set.count(resource)) {
                // record dependencies discovered beyond the seeds
                for (const auto& name : ordered) {
                    if (!seed_set.count(name)) subgraphs.back().referenced_resources.push_back(name);
                }
            }
        }

        auto linearized = linearize(subgraphs);
        run.context.context_text = std::move(linearized.text);
        run.context.provenance = std::move(linearized.provenance);
        run.context.resources = ordered;
        break;
    }
    }

    run.context.token_count = options.tokenizer(run.context.context_text);
    run.prompt = assemble_prompt(strategy, user_query, run.context.context_text);
    return run;
}

StrategyRun run_strategy(StrategyId strategy, const std::string& user_query,
                         const StrategyStores& stores, providers::GenerationProvider& generator,
                         const StrategyOptions& options) {
    StrategyRun run = prepare_strategy(strategy, user_query, stores, options);
    try {
        run.raw_reply = generator.generate(run.prompt, 0.0);
    } catch (const std::exception& e) {
        throw GenerationError(std::string("generation failed for strategy ") + to_string(strategy) +
                                  ": " + e.what(),
                              run.prompt, run.context);
    }
    run.generated_code = extract_code(run.raw_reply);
    return run;
}

} // namespace iacbench::retrieval
