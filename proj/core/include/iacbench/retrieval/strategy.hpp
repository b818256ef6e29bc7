#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iacbench/common/errors.hpp"
#include "iacbench/index/chunk_index.hpp"
#include "iacbench/index/node_index.hpp"
#include "iacbench/kg/graph.hpp"
#include "iacbench/providers/generation.hpp"
#include "iacbench/retrieval/linearize.hpp"
#include "iacbench/retrieval/prompt.hpp"
#include "iacbench/retrieval/tokenizer.hpp"

namespace iacbench::retrieval {

struct RetrievedContext {
    StrategyId strategy = StrategyId::NoRag;
    std::vector<std::string> resources; // retrieval order
    std::string context_text;
    std::size_t token_count = 0;
    std::vector<ProvenanceEntry> provenance;
};

// Unique resource names from ranked chunk hits, first occurrence (best rank)
// preserved.
std::vector<std::string> resolve_resources(const std::vector<index::ChunkHit>& chunk_hits);

// The stores a strategy may touch. Absent stores the strategy requires raise
// ConfigError naming the store.
struct StrategyStores {
    const index::ChunkIndex* chunk_index = nullptr;
    const index::NodeIndex* raw_node_index = nullptr;     // GR_OPTMATCH
    const index::NodeIndex* summary_node_index = nullptr; // GR_LLMSUM
    const kg::ConfigKnowledgeGraph* graph = nullptr;      // graph strategies
};

struct StrategyOptions {
    std::size_t top_k_chunks = 5;
    std::size_t top_k_optional = 5;
    int reference_depth = 2; // the 1-hop setting
    Tokenizer tokenizer = default_tokenizer();
};

struct StrategyRun {
    std::string prompt;
    RetrievedContext context;
    std::string generated_code;
    std::string raw_reply;
};

// Provider failure during generation; carries the assembled prompt and
// retrieved context so the caller can retry without re-running retrieval.
class GenerationError : public ProviderError {
public:
    GenerationError(const std::string& msg, std::string prompt, RetrievedContext context)
        : ProviderError(msg), prompt(std::move(prompt)), context(std::move(context)) {}

    std::string prompt;
    RetrievedContext context;
};

// End-to-end pipeline for one query: retrieval per strategy, context
// linearization, prompt assembly, then generation at temperature 0.0.
// Pipelines:
//   NO_RAG      query only
//   NAIVE_RAG   top-5 chunks concatenated in rank order
//   GR_BASE     top-5 chunks -> resolve -> base subgraph per resource
//   GR_OPTMATCH resolve -> node-level selection (raw index) -> filtered subgraph
//   GR_LLMSUM   as GR_OPTMATCH against the summary index
//   GR_REF      GR_BASE plus reference expansion at depth 2; referenced
//               resources contribute base subgraphs after the seeds
StrategyRun run_strategy(StrategyId strategy, const std::string& user_query,
                         const StrategyStores& stores, providers::GenerationProvider& generator,
                         const StrategyOptions& options = {});

// Retrieval only (no generation); prompt is still assembled.
StrategyRun prepare_strategy(StrategyId strategy, const std::string& user_query,
                             const StrategyStores& stores, const StrategyOptions& options = {});

} // namespace iacbench::retrieval
