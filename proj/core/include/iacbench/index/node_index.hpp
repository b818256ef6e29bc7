#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iacbench/kg/graph.hpp"
#include "iacbench/providers/embedding.hpp"

namespace iacbench::index {

enum class NodeEntryKind { OptionalArgument, OptionalBlock, Example };

const char* to_string(NodeEntryKind kind);

struct NodeIndexEntry {
    std::string node_id;
    NodeEntryKind kind = NodeEntryKind::OptionalArgument;
    std::string resource_name;
    std::string label; // argument/block name, or example title
    std::string embedded_text;
    std::vector<double> vector;
    double norm = 0.0;
};

enum class NodeTextSource { RawDescription, LlmSummary };

class NodeIndex {
public:
    NodeIndex() = default;
    NodeIndex(std::vector<NodeIndexEntry> entries, std::size_t dimension, std::string provider_id,
              NodeTextSource source, std::shared_ptr<providers::EmbeddingProvider> provider);

    std::size_t size() const { return entries_.size(); }
    std::size_t dimension() const { return dimension_; }
    NodeTextSource text_source() const { return source_; }
    const std::string& provider_id() const { return provider_id_; }
    const std::vector<NodeIndexEntry>& entries() const { return entries_; }
    const std::shared_ptr<providers::EmbeddingProvider>& provider() const { return provider_; }

    void attach_provider(std::shared_ptr<providers::EmbeddingProvider> provider);

private:
    std::vector<NodeIndexEntry> entries_;
    std::size_t dimension_ = 0;
    std::string provider_id_;
    NodeTextSource source_ = NodeTextSource::RawDescription;
    std::shared_ptr<providers::EmbeddingProvider> provider_;
};

// Indexes, per resource: top-level optional arguments, top-level optional
// blocks, and examples (the node kinds the filtered traversal can select).
// Raw-description mode embeds the description, falling back to the bare name
// when the description is empty. Summary mode requires `summaries` to cover
// every indexed node and raises IndexError listing uncovered nodes otherwise.
NodeIndex build_node_index(const kg::ConfigKnowledgeGraph& graph,
                           std::shared_ptr<providers::EmbeddingProvider> provider,
                           NodeTextSource text_source,
                           const std::map<std::string, std::string>* summaries = nullptr);

struct OptionalSelections {
    std::vector<std::string> optional_args;   // names, best first
    std::vector<std::string> optional_blocks; // names, best first
    std::string example_title;                // empty when the resource has no examples
};

// Per-kind top-k cosine ranking restricted to one resource's nodes; fewer
// than k available means all are returned. An absent resource yields empty
// selections.
OptionalSelections select_optional_elements(const NodeIndex& index, const std::string& resource_name,
                                            const std::string& query_text, std::size_t k = 5);

std::string export_node_index(const NodeIndex& index);
NodeIndex import_node_index(std::string_view content,
                            std::shared_ptr<providers::EmbeddingProvider> provider);

void save_node_index(const std::filesystem::path& path, const NodeIndex& index);
NodeIndex load_node_index(const std::filesystem::path& path,
                          std::shared_ptr<providers::EmbeddingProvider> provider);

} // namespace iacbench::index
