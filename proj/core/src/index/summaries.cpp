#include "iacbench/index/summaries.hpp"

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::index {

namespace {

std::string fallback_text(const kg::GraphNode& node) {
    switch (node.kind) {
    case kg::NodeKind::Resource:
        return std::get<kg::ResourceProps>(node.props).description.empty()
                   ? std::get<kg::ResourceProps>(node.props).name
                   : std::get<kg::ResourceProps>(node.props).description;
    case kg::NodeKind::Argument: {
        const auto& p = std::get<kg::ArgumentProps>(node.props);
        return p.description.empty() ? p.name : p.description;
    }
    case kg::NodeKind::Block: {
        const auto& p = std::get<kg::BlockProps>(node.props);
        return p.description.empty() ? p.name : p.description;
    }
    case kg::NodeKind::Example: {
        const auto& p = std::get<kg::ExampleProps>(node.props);
        return p.name;
    }
    case kg::NodeKind::Attribute:
        break;
    }
    return node.display_name();
}

} // namespace

std::string summary_prompt(const kg::GraphNode& node) {
    switch (node.kind) {
    case kg::NodeKind::Resource: {
        const auto& p = std::get<kg::ResourceProps>(node.props);
        return "Summarize the primary capabilities and common configuration scenarios of the "
               "Terraform resource `" +
               p.name + "`. Official description: " + (p.description.empty() ? "(none)" : p.description) +
               "\nReply with one dense paragraph optimized for semantic search.";
    }
    case kg::NodeKind::Argument: {
        const auto& p = std::get<kg::ArgumentProps>(node.props);
        return "Explain how the configuration parameter `" + p.id + "` of Terraform resource `" +
               p.resource + "` connects user goals to functional outcomes. Type: " + p.type +
               ". Required: " + (p.required ? "yes" : "no") +
               ". Official description: " + (p.description.empty() ? "(none)" : p.description) +
               "\nReply with one dense sentence optimized for semantic search.";
    }
    case kg::NodeKind::Block: {
        const auto& p = std::get<kg::BlockProps>(node.props);
        return "Describe what the configuration block `" + p.id + "` of Terraform resource `" +
               p.resource + "` enables and when a user would configure it. Official description: " +
               (p.description.empty() ? "(none)" : p.description) +
               "\nReply with one dense sentence optimized for semantic search.";
    }
    case kg::NodeKind::Example: {
        const auto& p = std::get<kg::ExampleProps>(node.props);
        return "Summarize the scenario demonstrated by this Terraform usage example of `" + p.resource +
               "` titled \"" + p.name + "\":\n" + p.code +
               "\nReply with one dense sentence optimized for semantic search.";
    }
    case kg::NodeKind::Attribute:
        break;
    }
    throw Error("summary_prompt: unsupported node kind");
}

SummariesResult generate_node_summaries(const kg::ConfigKnowledgeGraph& graph,
                                        providers::GenerationProvider& generator,
                                        const std::optional<std::filesystem::path>& cache_path) {
    SummariesResult result;

    std::map<std::string, std::string> cache;
    if (cache_path && std::filesystem::exists(*cache_path)) {
        cache = load_summaries(*cache_path);
    }
    bool cache_dirty = false;

    for (const auto& node : graph.nodes()) {
        if (node.kind == kg::NodeKind::Attribute) continue;
        std::string prompt = summary_prompt(node);
        std::string key = text::fnv1a_hex(std::string(kSummaryTemplateVersion) + "|" + node.node_id +
                                          "|" + prompt);
        auto it = cache.find(key);
        if (it != cache.end()) {
            result.by_node[node.node_id] = it->second;
            ++result.cache_hits;
            continue;
        }
        try {
            ++result.generator_calls;
            std::string summary = generator.generate(prompt, 0.0);
            result.by_node[node.node_id] = summary;
            cache[key] = summary;
            cache_dirty = true;
        } catch (const std::exception& e) {
            result.failures.push_back({node.node_id, e.what()});
            result.by_node[node.node_id] = fallback_text(node);
        }
    }

    if (cache_path && cache_dirty) {
        save_summaries(*cache_path, cache);
    }
    return result;
}

void save_summaries(const std::filesystem::path& path, const std::map<std::string, std::string>& map) {
    nlohmann::json j(map);
    fs::write_file(path, j.dump(2) + "\n");
}

std::map<std::string, std::string> load_summaries(const std::filesystem::path& path) {
    nlohmann::json j = nlohmann::json::parse(fs::read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("summaries: invalid JSON object");
    return j.get<std::map<std::string, std::string>>();
}

} // namespace iacbench::index
