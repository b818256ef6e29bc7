#include "iacbench/kg/subgraph.hpp"

#include <algorithm>

#include "iacbench/common/errors.hpp"

namespace iacbench::kg {

namespace {

SubgraphArg to_subgraph_arg(const GraphNode& node, bool with_description) {
    const auto& props = std::get<ArgumentProps>(node.props);
    SubgraphArg arg;
    arg.node_id = node.node_id;
    arg.name = props.name;
    arg.type = props.type;
    arg.required = props.required;
    if (with_description) arg.description = props.description;
    return arg;
}

SubgraphBlock expand_block(const ConfigKnowledgeGraph& graph, const GraphNode& block_node) {
    const auto& props = std::get<BlockProps>(block_node.props);
    SubgraphBlock block;
    block.node_id = block_node.node_id;
    block.name = props.name;
    block.cardinality = props.cardinality;
    block.description = props.description;

    for (const GraphEdge* edge : graph.out_edges(block_node.node_id, EdgeKind::HasArgument)) {
        const GraphNode* arg_node = graph.find_node(edge->target);
        const auto& arg_props = std::get<ArgumentProps>(arg_node->props);
        if (arg_props.required) {
            block.required_arguments.push_back(to_subgraph_arg(*arg_node, true));
        } else {
            block.optional_arguments.push_back(to_subgraph_arg(*arg_node, false));
        }
    }
    for (const GraphEdge* edge : graph.out_edges(block_node.node_id, EdgeKind::HasBlock)) {
        const GraphNode* nested = graph.find_node(edge->target);
        const auto& nested_props = std::get<BlockProps>(nested->props);
        if (nested_props.cardinality.min >= 1) {
            block.required_blocks.push_back(expand_block(graph, *nested));
        } else {
            block.optional_block_names.push_back(
                {nested->node_id, nested_props.name, nested_props.cardinality});
        }
    }
    return block;
}

const GraphNode& require_resource(const ConfigKnowledgeGraph& graph, const std::string& name) {
    const GraphNode* node = graph.find_resource(name);
    if (!node) throw NotFoundError("subgraph: unknown resource " + name);
    return *node;
}

} // namespace

ResourceSubgraph base_subgraph(const ConfigKnowledgeGraph& graph, const std::string& resource_name) {
    const GraphNode& res = require_resource(graph, resource_name);
    const auto& res_props = std::get<ResourceProps>(res.props);

    ResourceSubgraph result;
    result.resource_name = res_props.name;
    result.description = res_props.description;

    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasArgument)) {
        const GraphNode* arg_node = graph.find_node(edge->target);
        const auto& props = std::get<ArgumentProps>(arg_node->props);
        if (props.required) {
            result.required_arguments.push_back(to_subgraph_arg(*arg_node, true));
        } else {
            result.optional_arguments.push_back(to_subgraph_arg(*arg_node, false));
        }
    }
    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasBlock)) {
        const GraphNode* block_node = graph.find_node(edge->target);
        const auto& props = std::get<BlockProps>(block_node->props);
        if (props.cardinality.min >= 1) {
            result.required_blocks.push_back(expand_block(graph, *block_node));
        }
    }
    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasExample)) {
        const GraphNode* example_node = graph.find_node(edge->target);
        const auto& props = std::get<ExampleProps>(example_node->props);
        if (props.index == 0) {
            result.example = SubgraphExample{example_node->node_id, props.name, props.code, props.index};
            break;
        }
    }
    return result;
}

ResourceSubgraph filtered_subgraph(const ConfigKnowledgeGraph& graph, const std::string& resource_name,
                                   const std::vector<std::string>& selected_optional_args,
                                   const std::vector<std::string>& selected_optional_blocks,
                                   const std::string& selected_example_title) {
    const GraphNode& res = require_resource(graph, resource_name);
    const auto& res_props = std::get<ResourceProps>(res.props);

    auto selected = [](const std::vector<std::string>& names, const std::string& name) {
        return std::find(names.begin(), names.end(), name) != names.end();
    };

    ResourceSubgraph result;
    result.resource_name = res_props.name;
    result.description = res_props.description;
    result.optional_args_detailed = true;

    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasArgument)) {
        const GraphNode* arg_node = graph.find_node(edge->target);
        const auto& props = std::get<ArgumentProps>(arg_node->props);
        if (props.required) {
            result.required_arguments.push_back(to_subgraph_arg(*arg_node, true));
        } else if (selected(selected_optional_args, props.name)) {
            result.optional_arguments.push_back(to_subgraph_arg(*arg_node, true));
        }
    }
    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasBlock)) {
        const GraphNode* block_node = graph.find_node(edge->target);
        const auto& props = std::get<BlockProps>(block_node->props);
        if (props.cardinality.min >= 1) {
            result.required_blocks.push_back(expand_block(graph, *block_node));
        } else if (selected(selected_optional_blocks, props.name)) {
            result.selected_optional_blocks.push_back(expand_block(graph, *block_node));
        }
    }
    for (const GraphEdge* edge : graph.out_edges(res.node_id, EdgeKind::HasExample)) {
        const GraphNode* example_node = graph.find_node(edge->target);
        const auto& props = std::get<ExampleProps>(example_node->props);
        if (props.name == selected_example_title) {
            result.example = SubgraphExample{example_node->node_id, props.name, props.code, props.index};
            break;
        }
    }
    return result;
}

} // namespace iacbench::kg
