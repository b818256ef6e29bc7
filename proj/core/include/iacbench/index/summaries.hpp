#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iacbench/kg/graph.hpp"
#include "iacbench/providers/generation.hpp"

namespace iacbench::index {

// Bump when any prompt template changes; part of every cache key.
inline constexpr const char* kSummaryTemplateVersion = "v1";

// Kind-specific prompt for one graph node, instructing the generator to focus
// on capabilities and configuration scenarios rather than structure.
std::string summary_prompt(const kg::GraphNode& node);

struct SummaryFailure {
    std::string node_id;
    std::string error;
};

struct SummariesResult {
    std::map<std::string, std::string> by_node; // node id -> summary (or raw-description fallback)
    std::vector<SummaryFailure> failures;
    std::size_t generator_calls = 0;
    std::size_t cache_hits = 0;
};

// One summary per Resource/Argument/Block/Example node. Summaries are cached
// keyed by (node id, template version, prompt content hash); with cache_path
// set the cache persists to disk, making repeat builds reproducible without
// generator calls. A failing generator is recorded and the node falls back to
// its raw description (or name).
SummariesResult generate_node_summaries(const kg::ConfigKnowledgeGraph& graph,
                                        providers::GenerationProvider& generator,
                                        const std::optional<std::filesystem::path>& cache_path = {});

void save_summaries(const std::filesystem::path& path, const std::map<std::string, std::string>& map);
std::map<std::string, std::string> load_summaries(const std::filesystem::path& path);

} // namespace iacbench::index
