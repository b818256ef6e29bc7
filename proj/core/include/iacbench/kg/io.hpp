#pragma once

#include <filesystem>
#include <string>

#include "iacbench/kg/graph.hpp"

namespace iacbench::kg {

// Line-oriented export: one record per node (kind, id, JSON properties) and
// per edge (kind, source, target), tab-separated. Nodes are ordered by kind
// then id, edges by kind then endpoints, so exports are diffable. Import
// applies records in file order.
std::string export_graph(const ConfigKnowledgeGraph& graph);
ConfigKnowledgeGraph import_graph(std::string_view content);

void save_graph(const std::filesystem::path& path, const ConfigKnowledgeGraph& graph);
ConfigKnowledgeGraph load_graph(const std::filesystem::path& path);

} // namespace iacbench::kg
