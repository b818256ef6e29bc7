#include "iacbench/kg/references.hpp"

#include <deque>
#include <set>

#include "iacbench/common/errors.hpp"

namespace iacbench::kg {

namespace {

// Argument nodes reachable from the resource through the hierarchy, in
// insertion order.
std::vector<std::string> argument_nodes_of(const ConfigKnowledgeGraph& graph,
                                           const std::string& resource_name) {
    std::vector<std::string> args;
    const GraphNode* res = graph.find_resource(resource_name);
    if (!res) return args;
    std::deque<std::string> queue{res->node_id};
    while (!queue.empty()) {
        std::string id = queue.front();
        queue.pop_front();
        for (const GraphEdge* edge : graph.out_edges(id, EdgeKind::HasArgument)) {
            args.push_back(edge->target);
        }
        for (const GraphEdge* edge : graph.out_edges(id, EdgeKind::HasBlock)) {
            queue.push_back(edge->target);
        }
    }
    return args;
}

} // namespace

std::pair<ConfigKnowledgeGraph, ReferenceInsertionReport>
add_reference_edges(const ConfigKnowledgeGraph& graph, const std::vector<ReferenceCandidate>& refs) {
    ConfigKnowledgeGraph updated = graph;
    ReferenceInsertionReport report;

    for (const auto& ref : refs) {
        const std::string source_id = argument_node_id(ref.source_resource, ref.source_argument);
        const GraphNode* source = updated.find_node(source_id);
        if (!source) {
            report.missing.push_back("missing source argument " + ref.source_resource + "." +
                                     ref.source_argument);
            continue;
        }
        // REFERENCES targets may be attributes or arguments; attributes first
        // since references overwhelmingly point at exported values.
        std::string target_id = attribute_node_id(ref.target_resource, ref.target_element);
        if (!updated.find_node(target_id)) {
            target_id = argument_node_id(ref.target_resource, ref.target_element);
        }
        if (!updated.find_node(target_id)) {
            report.missing.push_back("missing target element " + ref.target_resource + "." +
                                     ref.target_element);
            continue;
        }
        if (updated.add_edge(EdgeKind::References, source_id, target_id)) {
            ++report.inserted;
        } else {
            ++report.duplicates;
        }
    }
    return {std::move(updated), std::move(report)};
}

std::vector<std::string> expand_references(const ConfigKnowledgeGraph& graph,
                                           const std::vector<std::string>& seed_resources, int depth) {
    if (depth < 1) throw Error("expand_references: depth must be >= 1");
    for (const auto& seed : seed_resources) {
        if (!graph.find_resource(seed)) throw NotFoundError("expand_references: unknown seed " + seed);
    }

    std::vector<std::string> result;
    std::set<std::string> seen;
    for (const auto& seed : seed_resources) {
        if (seen.insert(seed).second) result.push_back(seed);
    }

    std::vector<std::string> frontier(result);
    for (int hop = 1; hop < depth; ++hop) {
        std::vector<std::string> next;
        for (const auto& resource : frontier) {
            for (const auto& arg_id : argument_nodes_of(graph, resource)) {
                for (const GraphEdge* edge : graph.out_edges(arg_id, EdgeKind::References)) {
                    const GraphNode* target = graph.find_node(edge->target);
                    const std::string& owner = target->resource();
                    if (seen.insert(owner).second) {
                        result.push_back(owner);
                        next.push_back(owner);
                    }
                }
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return result;
}

} // namespace iacbench::kg
