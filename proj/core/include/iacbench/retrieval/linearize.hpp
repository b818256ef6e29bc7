#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iacbench/kg/subgraph.hpp"

namespace iacbench::retrieval {

// (source kind, identifier) pair recording where a linearized element came
// from: ("resource", name), ("argument", node id), ("block", node id),
// ("example", node id), or ("chunk", chunk id) for chunk-based context.
using ProvenanceEntry = std::pair<std::string, std::string>;

struct LinearizedContext {
    std::string text;
    std::vector<ProvenanceEntry> provenance;
};

// Renders subgraphs into the fixed section skeleton, one RESOURCE section per
// subgraph in the given order:
//
//   RESOURCE: {name}
//   Description: {description}
//   REQUIRED ARGUMENTS:
//   - {name} ({type}): {description}
//   OPTIONAL ARGUMENTS:
//   - {name} ({type})
//   REQUIRED BLOCKS:
//   {block} (cardinality: {min}-{max}):
//    - {nested arg} ({type}): {description}
//   BASIC USAGE EXAMPLE:
//   {code}
//
// Required elements precede optional ones; nesting renders as indentation;
// empty sections keep their header with an empty body.
LinearizedContext linearize(const std::vector<kg::ResourceSubgraph>& subgraphs);

} // namespace iacbench::retrieval
