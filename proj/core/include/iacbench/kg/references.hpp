#pragma once

#include <string>
#include <vector>

#include "iacbench/kg/graph.hpp"

namespace iacbench::kg {

// A candidate cross-resource dependency: an argument of one resource that
// must reference an element (attribute or argument) of another.
struct ReferenceCandidate {
    std::string source_resource;
    std::string source_argument; // hierarchical path within the source resource
    std::string target_resource;
    std::string target_element; // attribute name, or argument path

    bool operator==(const ReferenceCandidate&) const = default;
};

struct ReferenceInsertionReport {
    std::size_t inserted = 0;
    std::size_t duplicates = 0;
    std::vector<std::string> missing; // one entry per candidate with an absent endpoint
};

// Inserts REFERENCES edges for candidates whose endpoints both exist; entries
// with missing endpoints are reported, never inserted; duplicates are ignored.
// Returns a new graph version, leaving the input untouched.
std::pair<ConfigKnowledgeGraph, ReferenceInsertionReport>
add_reference_edges(const ConfigKnowledgeGraph& graph, const std::vector<ReferenceCandidate>& refs);

// Seeds plus every resource reachable along REFERENCES edges in at most
// depth - 1 hops, in seed order followed by breadth-first discovery order.
// depth >= 1; unknown seeds raise NotFoundError.
std::vector<std::string> expand_references(const ConfigKnowledgeGraph& graph,
                                           const std::vector<std::string>& seed_resources, int depth);

} // namespace iacbench::kg
