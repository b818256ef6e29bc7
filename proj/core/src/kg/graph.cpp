#include "iacbench/kg/graph.hpp"

#include "iacbench/common/errors.hpp"

namespace iacbench::kg {

const char* to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Resource:
        return "Resource";
    case NodeKind::Argument:
        return "Argument";
    case NodeKind::Block:
        return "Block";
    case NodeKind::Attribute:
        return "Attribute";
    case NodeKind::Example:
        return "Example";
    }
    return "?";
}

const char* to_string(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::HasArgument:
        return "HAS_ARGUMENT";
    case EdgeKind::HasBlock:
        return "HAS_BLOCK";
    case EdgeKind::ExportsAttribute:
        return "EXPORTS_ATTRIBUTE";
    case EdgeKind::HasExample:
        return "HAS_EXAMPLE";
    case EdgeKind::References:
        return "REFERENCES";
    }
    return "?";
}

NodeKind node_kind_from_string(const std::string& s) {
    if (s == "Resource") return NodeKind::Resource;
    if (s == "Argument") return NodeKind::Argument;
    if (s == "Block") return NodeKind::Block;
    if (s == "Attribute") return NodeKind::Attribute;
    if (s == "Example") return NodeKind::Example;
    throw ParseError("unknown node kind: " + s);
}

EdgeKind edge_kind_from_string(const std::string& s) {
    if (s == "HAS_ARGUMENT") return EdgeKind::HasArgument;
    if (s == "HAS_BLOCK") return EdgeKind::HasBlock;
    if (s == "EXPORTS_ATTRIBUTE") return EdgeKind::ExportsAttribute;
    if (s == "HAS_EXAMPLE") return EdgeKind::HasExample;
    if (s == "REFERENCES") return EdgeKind::References;
    throw ParseError("unknown edge kind: " + s);
}

const std::string& GraphNode::resource() const {
    switch (kind) {
    case NodeKind::Resource:
        return std::get<ResourceProps>(props).name;
    case NodeKind::Argument:
        return std::get<ArgumentProps>(props).resource;
    case NodeKind::Block:
        return std::get<BlockProps>(props).resource;
    case NodeKind::Attribute:
        return std::get<AttributeProps>(props).resource;
    case NodeKind::Example:
        return std::get<ExampleProps>(props).resource;
    }
    throw Error("GraphNode::resource: bad kind");
}

std::string GraphNode::display_name() const {
    switch (kind) {
    case NodeKind::Resource:
        return std::get<ResourceProps>(props).name;
    case NodeKind::Argument:
        return std::get<ArgumentProps>(props).name;
    case NodeKind::Block:
        return std::get<BlockProps>(props).name;
    case NodeKind::Attribute:
        return std::get<AttributeProps>(props).name;
    case NodeKind::Example:
        return std::get<ExampleProps>(props).name;
    }
    return {};
}

std::string resource_node_id(const std::string& resource) { return "r:" + resource; }
std::string argument_node_id(const std::string& resource, const std::string& path) {
    return "a:" + resource + ":" + path;
}
std::string block_node_id(const std::string& resource, const std::string& path) {
    return "b:" + resource + ":" + path;
}
std::string attribute_node_id(const std::string& resource, const std::string& name) {
    return "t:" + resource + ":" + name;
}
std::string example_node_id(const std::string& resource, int index) {
    return "e:" + resource + ":" + std::to_string(index);
}

bool edge_kinds_allowed(EdgeKind kind, NodeKind source, NodeKind target) {
    switch (kind) {
    case EdgeKind::HasArgument:
        return (source == NodeKind::Resource || source == NodeKind::Block) &&
               target == NodeKind::Argument;
    case EdgeKind::HasBlock:
        return (source == NodeKind::Resource || source == NodeKind::Block) && target == NodeKind::Block;
    case EdgeKind::ExportsAttribute:
        return source == NodeKind::Resource && target == NodeKind::Attribute;
    case EdgeKind::HasExample:
        return source == NodeKind::Resource && target == NodeKind::Example;
    case EdgeKind::References:
        return source == NodeKind::Argument &&
               (target == NodeKind::Attribute || target == NodeKind::Argument);
    }
    return false;
}

void ConfigKnowledgeGraph::add_node(GraphNode node) {
    if (node_index_.count(node.node_id)) {
        throw SchemaError("graph: duplicate node id " + node.node_id);
    }
    if (node.kind != NodeKind::Resource && !resource_index_.count(node.resource())) {
        throw SchemaError("graph: node " + node.node_id + " references unknown resource " +
                          node.resource());
    }
    if (node.kind == NodeKind::Resource) {
        const auto& name = std::get<ResourceProps>(node.props).name;
        if (resource_index_.count(name)) {
            throw SchemaError("graph: duplicate resource name " + name);
        }
        resource_index_[name] = nodes_.size();
    }
    node_index_[node.node_id] = nodes_.size();
    nodes_.push_back(std::move(node));
}

bool ConfigKnowledgeGraph::add_edge(EdgeKind kind, const std::string& source,
                                    const std::string& target) {
    const GraphNode* src = find_node(source);
    const GraphNode* dst = find_node(target);
    if (!src || !dst) {
        throw SchemaError(std::string("graph: edge ") + to_string(kind) + " has missing endpoint " +
                          (src ? target : source));
    }
    if (!edge_kinds_allowed(kind, src->kind, dst->kind)) {
        throw SchemaError(std::string("graph: ill-typed edge ") + to_string(kind) + " from " +
                          to_string(src->kind) + " to " + to_string(dst->kind));
    }
    auto key = std::make_tuple(kind, source, target);
    if (edge_keys_.count(key)) return false;
    edge_keys_.insert(key);
    out_edges_[source].push_back(edges_.size());
    edges_.push_back({kind, source, target});
    return true;
}

const GraphNode* ConfigKnowledgeGraph::find_node(const std::string& node_id) const {
    auto it = node_index_.find(node_id);
    return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

const GraphNode* ConfigKnowledgeGraph::find_resource(const std::string& resource_name) const {
    auto it = resource_index_.find(resource_name);
    return it == resource_index_.end() ? nullptr : &nodes_[it->second];
}

std::vector<const GraphEdge*> ConfigKnowledgeGraph::out_edges(const std::string& node_id,
                                                              EdgeKind kind) const {
    std::vector<const GraphEdge*> result;
    auto it = out_edges_.find(node_id);
    if (it == out_edges_.end()) return result;
    for (std::size_t idx : it->second) {
        if (edges_[idx].kind == kind) result.push_back(&edges_[idx]);
    }
    return result;
}

std::map<NodeKind, std::size_t> ConfigKnowledgeGraph::node_counts_by_kind() const {
    std::map<NodeKind, std::size_t> counts;
    for (const auto& n : nodes_) ++counts[n.kind];
    return counts;
}

std::map<EdgeKind, std::size_t> ConfigKnowledgeGraph::edge_counts_by_kind() const {
    std::map<EdgeKind, std::size_t> counts;
    for (const auto& e : edges_) ++counts[e.kind];
    return counts;
}

std::vector<std::string> ConfigKnowledgeGraph::resource_names() const {
    std::vector<std::string> names;
    names.reserve(resource_index_.size());
    for (const auto& n : nodes_) {
        if (n.kind == NodeKind::Resource) names.push_back(std::get<ResourceProps>(n.props).name);
    }
    return names;
}

} // namespace iacbench::kg
