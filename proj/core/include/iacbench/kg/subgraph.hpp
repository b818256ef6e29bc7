#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iacbench/kg/graph.hpp"

namespace iacbench::kg {

struct SubgraphArg {
    std::string node_id;
    std::string name;
    std::string type;
    std::string description;
    bool required = false;
};

// Name-only surface of an optional block that is not expanded.
struct SubgraphBlockRef {
    std::string node_id;
    std::string name;
    Cardinality cardinality;
};

struct SubgraphBlock {
    std::string node_id;
    std::string name;
    Cardinality cardinality;
    std::string description;
    std::vector<SubgraphArg> required_arguments;
    std::vector<SubgraphArg> optional_arguments; // names and types only
    std::vector<SubgraphBlock> required_blocks;  // expansion through required sub-blocks
    std::vector<SubgraphBlockRef> optional_block_names;
};

struct SubgraphExample {
    std::string node_id;
    std::string title;
    std::string code;
    int index = 0;
};

struct ResourceSubgraph {
    std::string resource_name;
    std::string description;
    std::vector<SubgraphArg> required_arguments;
    std::vector<SubgraphArg> optional_arguments;
    bool optional_args_detailed = false; // true when selections carry descriptions
    std::vector<SubgraphBlock> required_blocks;
    std::vector<SubgraphBlock> selected_optional_blocks;
    std::optional<SubgraphExample> example;
    std::vector<std::string> referenced_resources;
};

// Constrained extraction around one resource: required arguments in full,
// optional top-level arguments as names/types, blocks with cardinality
// min >= 1 expanded through required sub-blocks only, and the example with
// index 0. Raises NotFoundError for an unknown resource.
ResourceSubgraph base_subgraph(const ConfigKnowledgeGraph& graph, const std::string& resource_name);

// As base_subgraph, except optional arguments are restricted to the selected
// names (with descriptions), blocks pass when required or selected (selected
// optional blocks are expanded like required ones), and the example is chosen
// by exact title match. Unknown selected names silently fail the filter.
ResourceSubgraph filtered_subgraph(const ConfigKnowledgeGraph& graph, const std::string& resource_name,
                                   const std::vector<std::string>& selected_optional_args,
                                   const std::vector<std::string>& selected_optional_blocks,
                                   const std::string& selected_example_title);

} // namespace iacbench::kg
