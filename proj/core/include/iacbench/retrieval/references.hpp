#pragma once

#include <string>
#include <vector>

#include "iacbench/ingest/enrich.hpp"
#include "iacbench/kg/references.hpp"
#include "iacbench/providers/generation.hpp"

namespace iacbench::retrieval {

struct ReferenceExtraction {
    std::vector<kg::ReferenceCandidate> candidates;
    std::vector<std::string> filtered;    // rejected tuples (unknown resources)
    std::vector<std::string> diagnostics; // per-resource parse failures
};

// Builds the per-resource dependency-extraction prompt: the generator is asked
// which arguments must reference outputs of other resources, one candidate per
// reply line in the form "<argument> -> <resource>.<element>".
std::string reference_prompt(const ingest::EnrichedResourceSchema& schema);

// Parses one generator reply into candidates for `source_resource`.
// Returns false when no line of the reply is parseable.
bool parse_reference_reply(const std::string& source_resource, const std::string& reply,
                           std::vector<kg::ReferenceCandidate>& out);

// Prompts the generator once per schema and validates candidates against the
// known resource set; invalid tuples are filtered with a report, unparseable
// replies skip the resource with a diagnostic.
ReferenceExtraction
extract_reference_candidates(const std::vector<ingest::EnrichedResourceSchema>& schemas,
                             providers::GenerationProvider& generator);

} // namespace iacbench::retrieval
