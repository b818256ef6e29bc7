#include "iacbench/kg/build.hpp"

namespace iacbench::kg {

namespace {

void add_block_subtree(ConfigKnowledgeGraph& graph, const ingest::BlockSpec& block,
                       const std::string& parent_node_id) {
    const std::string block_id = block_node_id(block.owning_resource, block.id);
    graph.add_node({NodeKind::Block, block_id,
                    BlockProps{block.name, block.description, block.cardinality, block.id,
                               block.owning_resource}});
    graph.add_edge(EdgeKind::HasBlock, parent_node_id, block_id);

    for (const auto& arg : block.nested_arguments) {
        const std::string arg_id = argument_node_id(arg.owning_resource, arg.id);
        graph.add_node({NodeKind::Argument, arg_id,
                        ArgumentProps{arg.name, arg.description, arg.value_type, arg.required, arg.id,
                                      arg.owning_resource}});
        graph.add_edge(EdgeKind::HasArgument, block_id, arg_id);
    }
    for (const auto& nested : block.nested_blocks) {
        add_block_subtree(graph, nested, block_id);
    }
}

} // namespace

ConfigKnowledgeGraph build_graph(const std::vector<ingest::EnrichedResourceSchema>& schemas) {
    ConfigKnowledgeGraph graph;
    for (const auto& schema : schemas) {
        const std::string res_id = resource_node_id(schema.resource_name);
        graph.add_node(
            {NodeKind::Resource, res_id, ResourceProps{schema.resource_name, schema.description}});

        for (const auto& arg : schema.arguments) {
            const std::string arg_id = argument_node_id(schema.resource_name, arg.id);
            graph.add_node({NodeKind::Argument, arg_id,
                            ArgumentProps{arg.name, arg.description, arg.value_type, arg.required,
                                          arg.id, arg.owning_resource}});
            graph.add_edge(EdgeKind::HasArgument, res_id, arg_id);
        }
        for (const auto& block : schema.blocks) {
            add_block_subtree(graph, block, res_id);
        }
        for (const auto& attr : schema.attributes) {
            const std::string attr_id = attribute_node_id(schema.resource_name, attr.name);
            graph.add_node({NodeKind::Attribute, attr_id,
                            AttributeProps{attr.name, attr.description, attr.value_type,
                                           schema.resource_name}});
            graph.add_edge(EdgeKind::ExportsAttribute, res_id, attr_id);
        }
        for (const auto& example : schema.examples) {
            const std::string ex_id = example_node_id(schema.resource_name, example.index);
            graph.add_node({NodeKind::Example, ex_id,
                            ExampleProps{example.title, example.code, example.index,
                                         schema.resource_name}});
            graph.add_edge(EdgeKind::HasExample, res_id, ex_id);
        }
    }
    return graph;
}

} // namespace iacbench::kg
