#include "iacbench/index/node_index.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"
#include "iacbench/index/chunk_index.hpp"

namespace iacbench::index {

namespace {

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

struct PendingEntry {
    std::string node_id;
    NodeEntryKind kind;
    std::string resource;
    std::string label;
    std::string embedded_text;
};

} // namespace

const char* to_string(NodeEntryKind kind) {
    switch (kind) {
    case NodeEntryKind::OptionalArgument:
        return "optional-argument";
    case NodeEntryKind::OptionalBlock:
        return "optional-block";
    case NodeEntryKind::Example:
        return "example";
    }
    return "?";
}

NodeIndex::NodeIndex(std::vector<NodeIndexEntry> entries, std::size_t dimension,
                     std::string provider_id, NodeTextSource source,
                     std::shared_ptr<providers::EmbeddingProvider> provider)
    : entries_(std::move(entries)), dimension_(dimension), provider_id_(std::move(provider_id)),
      source_(source), provider_(std::move(provider)) {}

void NodeIndex::attach_provider(std::shared_ptr<providers::EmbeddingProvider> provider) {
    provider_ = std::move(provider);
}

NodeIndex build_node_index(const kg::ConfigKnowledgeGraph& graph,
                           std::shared_ptr<providers::EmbeddingProvider> provider,
                           NodeTextSource text_source,
                           const std::map<std::string, std::string>* summaries) {
    if (!provider) throw ConfigError("build_node_index: no embedding provider");

    std::vector<PendingEntry> pending;
    std::vector<std::string> uncovered;

    auto text_for = [&](const std::string& node_id, const std::string& raw_description,
                        const std::string& name) -> std::string {
        if (text_source == NodeTextSource::LlmSummary) {
            if (!summaries || !summaries->count(node_id)) {
                uncovered.push_back(node_id);
                return {};
            }
            return summaries->at(node_id);
        }
        // undocumented nodes lack semantic context beyond their element names
        return raw_description.empty() ? name : raw_description;
    };

    for (const auto& node : graph.nodes()) {
        if (node.kind != kg::NodeKind::Resource) continue;
        const std::string& resource = std::get<kg::ResourceProps>(node.props).name;

        for (const auto* edge : graph.out_edges(node.node_id, kg::EdgeKind::HasArgument)) {
            const auto* arg = graph.find_node(edge->target);
            const auto& props = std::get<kg::ArgumentProps>(arg->props);
            if (props.required) continue;
            pending.push_back({arg->node_id, NodeEntryKind::OptionalArgument, resource, props.name,
                               text_for(arg->node_id, props.description, props.name)});
        }
        for (const auto* edge : graph.out_edges(node.node_id, kg::EdgeKind::HasBlock)) {
            const auto* block = graph.find_node(edge->target);
            const auto& props = std::get<kg::BlockProps>(block->props);
            if (props.cardinality.min >= 1) continue;
            pending.push_back({block->node_id, NodeEntryKind::OptionalBlock, resource, props.name,
                               text_for(block->node_id, props.description, props.name)});
        }
        for (const auto* edge : graph.out_edges(node.node_id, kg::EdgeKind::HasExample)) {
            const auto* example = graph.find_node(edge->target);
            const auto& props = std::get<kg::ExampleProps>(example->props);
            std::string raw = props.name;
            if (!props.code.empty()) raw += "\n" + props.code;
            pending.push_back({example->node_id, NodeEntryKind::Example, resource, props.name,
                               text_for(example->node_id, raw, props.name)});
        }
    }

    if (!uncovered.empty()) {
        std::string msg = "build_node_index: summaries missing for nodes:";
        for (const auto& id : uncovered) msg += " " + id;
        throw IndexError(msg);
    }

    std::vector<std::string> texts;
    texts.reserve(pending.size());
    for (const auto& p : pending) texts.push_back(p.embedded_text);

    std::vector<std::vector<double>> vectors;
    if (!texts.empty()) {
        try {
            vectors = provider->embed(texts);
        } catch (const std::exception& e) {
            throw IndexError(std::string("build_node_index: provider failed: ") + e.what());
        }
        if (vectors.size() != texts.size()) {
            throw IndexError("build_node_index: provider returned wrong-length batch");
        }
    }

    std::vector<NodeIndexEntry> entries;
    entries.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        NodeIndexEntry entry;
        entry.node_id = pending[i].node_id;
        entry.kind = pending[i].kind;
        entry.resource_name = pending[i].resource;
        entry.label = pending[i].label;
        entry.embedded_text = pending[i].embedded_text;
        entry.vector = std::move(vectors[i]);
        if (entry.vector.size() != provider->dimension()) {
            throw IndexError("build_node_index: wrong vector dimension for " + entry.node_id);
        }
        entry.norm = l2_norm(entry.vector);
        if (entry.norm <= 0.0) throw IndexError("build_node_index: zero vector for " + entry.node_id);
        entries.push_back(std::move(entry));
    }
    const std::size_t dimension = provider->dimension();
    std::string provider_id = provider->id();
    return NodeIndex(std::move(entries), dimension, std::move(provider_id), text_source,
                     std::move(provider));
}

OptionalSelections select_optional_elements(const NodeIndex& index, const std::string& resource_name,
                                            const std::string& query_text, std::size_t k) {
    OptionalSelections selections;
    if (index.size() == 0) return selections;
    if (!index.provider()) throw ConfigError("select_optional_elements: index has no provider");

    std::vector<const NodeIndexEntry*> candidates;
    for (const auto& entry : index.entries()) {
        if (entry.resource_name == resource_name) candidates.push_back(&entry);
    }
    if (candidates.empty()) return selections;

    auto query = index.provider()->embed({query_text});
    const auto& q = query.at(0);
    double qn = l2_norm(q);
    if (qn <= 0.0) throw ProviderError("select_optional_elements: zero query vector");

    auto ranked = [&](NodeEntryKind kind) {
        std::vector<std::pair<double, const NodeIndexEntry*>> scored;
        for (const auto* entry : candidates) {
            if (entry->kind != kind) continue;
            scored.emplace_back(cosine_similarity(q, qn, entry->vector, entry->norm), entry);
        }
        std::stable_sort(scored.begin(), scored.end(), [](const auto& l, const auto& r) {
            if (l.first != r.first) return l.first > r.first;
            return l.second->node_id < r.second->node_id;
        });
        return scored;
    };

    for (const auto& [sim, entry] : ranked(NodeEntryKind::OptionalArgument)) {
        if (selections.optional_args.size() >= k) break;
        selections.optional_args.push_back(entry->label);
    }
    for (const auto& [sim, entry] : ranked(NodeEntryKind::OptionalBlock)) {
        if (selections.optional_blocks.size() >= k) break;
        selections.optional_blocks.push_back(entry->label);
    }
    auto examples = ranked(NodeEntryKind::Example);
    if (!examples.empty()) selections.example_title = examples.front().second->label;
    return selections;
}

std::string export_node_index(const NodeIndex& index) {
    std::string out = "# iacbench node-index v1\n";
    out += "meta\t" + std::to_string(index.dimension()) + "\t" + index.provider_id() + "\t" +
           (index.text_source() == NodeTextSource::RawDescription ? "raw" : "summary") + "\n";
    char buf[32];
    for (const auto& entry : index.entries()) {
        std::string vec;
        for (std::size_t i = 0; i < entry.vector.size(); ++i) {
            if (i) vec.push_back(' ');
            std::snprintf(buf, sizeof(buf), "%.9g", entry.vector[i]);
            vec += buf;
        }
        out += "nodevec\t" + entry.node_id + "\t" + to_string(entry.kind) + "\t" +
               entry.resource_name + "\t" + nlohmann::json(entry.label).dump() + "\t" +
               nlohmann::json(entry.embedded_text).dump() + "\t" + vec + "\n";
    }
    return out;
}

NodeIndex import_node_index(std::string_view content,
                            std::shared_ptr<providers::EmbeddingProvider> provider) {
    std::vector<NodeIndexEntry> entries;
    std::size_t dimension = 0;
    std::string provider_id;
    NodeTextSource source = NodeTextSource::RawDescription;

    for (const auto& line : text::split_lines(content)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = text::split(line, '\t');
        if (fields[0] == "meta" && fields.size() == 4) {
            dimension = std::stoul(fields[1]);
            provider_id = fields[2];
            source = fields[3] == "summary" ? NodeTextSource::LlmSummary : NodeTextSource::RawDescription;
            continue;
        }
        if (fields[0] != "nodevec" || fields.size() != 7) {
            throw ParseError("node index import: malformed record: " + line);
        }
        NodeIndexEntry entry;
        entry.node_id = fields[1];
        if (fields[2] == "optional-argument")
            entry.kind = NodeEntryKind::OptionalArgument;
        else if (fields[2] == "optional-block")
            entry.kind = NodeEntryKind::OptionalBlock;
        else if (fields[2] == "example")
            entry.kind = NodeEntryKind::Example;
        else
            throw ParseError("node index import: unknown entry kind " + fields[2]);
        entry.resource_name = fields[3];
        entry.label = nlohmann::json::parse(fields[4]).get<std::string>();
        entry.embedded_text = nlohmann::json::parse(fields[5]).get<std::string>();
        for (const auto& part : text::split(fields[6], ' ')) {
            if (!part.empty()) entry.vector.push_back(std::stod(part));
        }
        if (entry.vector.size() != dimension) {
            throw ParseError("node index import: wrong vector dimension for " + entry.node_id);
        }
        entry.norm = l2_norm(entry.vector);
        entries.push_back(std::move(entry));
    }
    if (provider && provider->id() != provider_id) {
        throw ConfigError("node index import: index built with provider '" + provider_id +
                          "', attaching '" + provider->id() + "'");
    }
    return NodeIndex(std::move(entries), dimension, provider_id, source, std::move(provider));
}

void save_node_index(const std::filesystem::path& path, const NodeIndex& index) {
    fs::write_file(path, export_node_index(index));
}

NodeIndex load_node_index(const std::filesystem::path& path,
                          std::shared_ptr<providers::EmbeddingProvider> provider) {
    return import_node_index(fs::read_file(path), std::move(provider));
}

} // namespace iacbench::index
