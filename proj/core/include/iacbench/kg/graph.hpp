#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "iacbench/ingest/schema.hpp" // Cardinality

namespace iacbench::kg {

using ingest::Cardinality;

enum class NodeKind { Resource, Argument, Block, Attribute, Example };
enum class EdgeKind { HasArgument, HasBlock, ExportsAttribute, HasExample, References };

const char* to_string(NodeKind kind);
const char* to_string(EdgeKind kind);
NodeKind node_kind_from_string(const std::string& s);
EdgeKind edge_kind_from_string(const std::string& s);

struct ResourceProps {
    std::string name;
    std::string description;
};

struct ArgumentProps {
    std::string name;
    std::string description;
    std::string type;
    bool required = false;
    std::string id; // hierarchical path
    std::string resource;
};

struct BlockProps {
    std::string name;
    std::string description;
    Cardinality cardinality;
    std::string id;
    std::string resource;
};

struct AttributeProps {
    std::string name;
    std::string description;
    std::string type;
    std::string resource;
};

struct ExampleProps {
    std::string name; // example title
    std::string code;
    int index = 0;
    std::string resource;
};

using NodeProps = std::variant<ResourceProps, ArgumentProps, BlockProps, AttributeProps, ExampleProps>;

struct GraphNode {
    NodeKind kind = NodeKind::Resource;
    std::string node_id;
    NodeProps props;

    const std::string& resource() const;
    std::string display_name() const;
};

struct GraphEdge {
    EdgeKind kind = EdgeKind::HasArgument;
    std::string source;
    std::string target;

    auto operator<=>(const GraphEdge&) const = default;
};

// Node id scheme: "r:<resource>", "a:<resource>:<path>", "b:<resource>:<path>",
// "t:<resource>:<name>", "e:<resource>:<index>".
std::string resource_node_id(const std::string& resource);
std::string argument_node_id(const std::string& resource, const std::string& path);
std::string block_node_id(const std::string& resource, const std::string& path);
std::string attribute_node_id(const std::string& resource, const std::string& name);
std::string example_node_id(const std::string& resource, int index);

// Returns true when the endpoint kinds are legal for the edge kind:
// HAS_ARGUMENT: Resource|Block -> Argument; HAS_BLOCK: Resource|Block -> Block;
// EXPORTS_ATTRIBUTE: Resource -> Attribute; HAS_EXAMPLE: Resource -> Example;
// REFERENCES: Argument -> Attribute|Argument.
bool edge_kinds_allowed(EdgeKind kind, NodeKind source, NodeKind target);

// In-memory typed property graph. Single-writer construction; immutable and
// safely shared once built.
class ConfigKnowledgeGraph {
public:
    // Raises SchemaError on duplicate node id, on a non-Resource node whose
    // resource is absent, or (for edges) on ill-typed endpoints. Duplicate
    // edges are ignored and reported via the return value.
    void add_node(GraphNode node);
    bool add_edge(EdgeKind kind, const std::string& source, const std::string& target);

    const GraphNode* find_node(const std::string& node_id) const;
    const GraphNode* find_resource(const std::string& resource_name) const;

    const std::vector<GraphNode>& nodes() const { return nodes_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    // Outgoing edge indices in insertion order.
    std::vector<const GraphEdge*> out_edges(const std::string& node_id, EdgeKind kind) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::map<NodeKind, std::size_t> node_counts_by_kind() const;
    std::map<EdgeKind, std::size_t> edge_counts_by_kind() const;

    std::vector<std::string> resource_names() const;

private:
    std::vector<GraphNode> nodes_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, std::size_t> node_index_;
    std::map<std::string, std::vector<std::size_t>> out_edges_;
    std::set<std::tuple<EdgeKind, std::string, std::string>> edge_keys_;
    std::map<std::string, std::size_t> resource_index_;
};

} // namespace iacbench::kg
