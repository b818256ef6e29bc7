#include "iacbench/kg/io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::kg {

namespace {

using nlohmann::json;

json props_to_json(const GraphNode& node) {
    json j;
    switch (node.kind) {
    case NodeKind::Resource: {
        const auto& p = std::get<ResourceProps>(node.props);
        j = {{"name", p.name}, {"description", p.description}};
        break;
    }
    case NodeKind::Argument: {
        const auto& p = std::get<ArgumentProps>(node.props);
        j = {{"name", p.name},   {"description", p.description}, {"type", p.type},
             {"required", p.required}, {"id", p.id},             {"resource", p.resource}};
        break;
    }
    case NodeKind::Block: {
        const auto& p = std::get<BlockProps>(node.props);
        j = {{"name", p.name}, {"description", p.description}, {"min", p.cardinality.min},
             {"id", p.id},     {"resource", p.resource}};
        if (p.cardinality.max)
            j["max"] = *p.cardinality.max;
        else
            j["max"] = "unbounded";
        break;
    }
    case NodeKind::Attribute: {
        const auto& p = std::get<AttributeProps>(node.props);
        j = {{"name", p.name}, {"description", p.description}, {"type", p.type},
             {"resource", p.resource}};
        break;
    }
    case NodeKind::Example: {
        const auto& p = std::get<ExampleProps>(node.props);
        j = {{"name", p.name}, {"code", p.code}, {"index", p.index}, {"resource", p.resource}};
        break;
    }
    }
    return j;
}

NodeProps props_from_json(NodeKind kind, const json& j) {
    switch (kind) {
    case NodeKind::Resource:
        return ResourceProps{j.at("name").get<std::string>(), j.at("description").get<std::string>()};
    case NodeKind::Argument:
        return ArgumentProps{j.at("name").get<std::string>(), j.at("description").get<std::string>(),
                             j.at("type").get<std::string>(), j.at("required").get<bool>(),
                             j.at("id").get<std::string>(),   j.at("resource").get<std::string>()};
    case NodeKind::Block: {
        Cardinality card;
        card.min = j.at("min").get<int>();
        if (!j.at("max").is_string()) card.max = j.at("max").get<int>();
        return BlockProps{j.at("name").get<std::string>(), j.at("description").get<std::string>(), card,
                          j.at("id").get<std::string>(), j.at("resource").get<std::string>()};
    }
    case NodeKind::Attribute:
        return AttributeProps{j.at("name").get<std::string>(), j.at("description").get<std::string>(),
                              j.at("type").get<std::string>(), j.at("resource").get<std::string>()};
    case NodeKind::Example:
        return ExampleProps{j.at("name").get<std::string>(), j.at("code").get<std::string>(),
                            j.at("index").get<int>(), j.at("resource").get<std::string>()};
    }
    throw Error("props_from_json: bad kind");
}

} // namespace

std::string export_graph(const ConfigKnowledgeGraph& graph) {
    std::vector<const GraphNode*> nodes;
    nodes.reserve(graph.nodes().size());
    for (const auto& n : graph.nodes()) nodes.push_back(&n);
    std::sort(nodes.begin(), nodes.end(), [](const GraphNode* l, const GraphNode* r) {
        if (l->kind != r->kind) return static_cast<int>(l->kind) < static_cast<int>(r->kind);
        return l->node_id < r->node_id;
    });

    std::vector<GraphEdge> edges = graph.edges();
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& l, const GraphEdge& r) {
        if (l.kind != r.kind) return static_cast<int>(l.kind) < static_cast<int>(r.kind);
        if (l.source != r.source) return l.source < r.source;
        return l.target < r.target;
    });

    std::string out = "# iacbench graph v1\n";
    for (const GraphNode* node : nodes) {
        out += "node\t";
        out += to_string(node->kind);
        out += '\t';
        out += node->node_id;
        out += '\t';
        out += props_to_json(*node).dump();
        out += '\n';
    }
    for (const auto& edge : edges) {
        out += "edge\t";
        out += to_string(edge.kind);
        out += '\t';
        out += edge.source;
        out += '\t';
        out += edge.target;
        out += '\n';
    }
    return out;
}

ConfigKnowledgeGraph import_graph(std::string_view content) {
    ConfigKnowledgeGraph graph;
    std::size_t line_no = 0;
    for (const auto& line : text::split_lines(content)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = text::split(line, '\t');
        if (fields[0] == "node") {
            if (fields.size() != 4) {
                throw ParseError("graph import: line " + std::to_string(line_no) + ": expected 4 fields");
            }
            NodeKind kind = node_kind_from_string(fields[1]);
            json props = json::parse(fields[3], nullptr, false);
            if (props.is_discarded()) {
                throw ParseError("graph import: line " + std::to_string(line_no) + ": bad properties");
            }
            graph.add_node({kind, fields[2], props_from_json(kind, props)});
        } else if (fields[0] == "edge") {
            if (fields.size() != 4) {
                throw ParseError("graph import: line " + std::to_string(line_no) + ": expected 4 fields");
            }
            graph.add_edge(edge_kind_from_string(fields[1]), fields[2], fields[3]);
        } else {
            throw ParseError("graph import: line " + std::to_string(line_no) + ": unknown record '" +
                             fields[0] + "'");
        }
    }
    return graph;
}

void save_graph(const std::filesystem::path& path, const ConfigKnowledgeGraph& graph) {
    fs::write_file(path, export_graph(graph));
}

ConfigKnowledgeGraph load_graph(const std::filesystem::path& path) {
    return import_graph(fs::read_file(path));
}

} // namespace iacbench::kg
