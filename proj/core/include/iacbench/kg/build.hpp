#pragma once

#include <vector>

#include "iacbench/ingest/enrich.hpp"
#include "iacbench/kg/graph.hpp"

namespace iacbench::kg {

// Instantiates the graph from enriched schemas: one Resource node per schema;
// argument/block/attribute/example nodes and hierarchy edges mirror the
// schema tree exactly. Duplicate resource names raise SchemaError.
ConfigKnowledgeGraph build_graph(const std::vector<ingest::EnrichedResourceSchema>& schemas);

} // namespace iacbench::kg
