#pragma once

#include <string>
#include <vector>

#include "iacbench/ingest/docpage.hpp"
#include "iacbench/ingest/schema.hpp"

namespace iacbench::ingest {

struct ArgumentSpec {
    std::string name;
    std::string value_type;
    bool required = false;
    std::string description;
    std::string id; // hierarchical path, names joined by "."
    std::string owning_resource;
};

struct AttributeSpec {
    std::string name;
    std::string value_type;
    std::string description;
};

struct ExampleSpec {
    std::string title;
    std::string code;
    int index = 0;
};

struct BlockSpec {
    std::string name;
    Cardinality cardinality;
    std::string description;
    std::string id;
    std::string owning_resource;
    std::vector<ArgumentSpec> nested_arguments;
    std::vector<BlockSpec> nested_blocks;

    bool required() const { return cardinality.min >= 1; }
};

struct EnrichedResourceSchema {
    std::string resource_name;
    std::string description;
    std::vector<ArgumentSpec> arguments;
    std::vector<BlockSpec> blocks;
    std::vector<AttributeSpec> attributes;
    std::vector<ExampleSpec> examples;
};

// A doc entry the matching cascade could not place (or that lost a
// first-wins conflict).
struct OrphanEntry {
    std::string section_context;
    std::string name;
    std::string text;
    std::string reason;
};

struct EnrichmentResult {
    EnrichedResourceSchema schema;
    std::vector<OrphanEntry> orphans;
    std::vector<std::string> warnings;
};

// Skeleton with ids and owning_resource filled in, all descriptions empty.
EnrichedResourceSchema schema_skeleton(const RawSchemaDump& dump);

// Description cleaning: collapse whitespace outside backtick spans, keep
// backtick spans verbatim, trim. Idempotent.
std::string clean_description(std::string_view raw);

// Section-context normalization, applied in this order: lowercase, strip the
// literal tokens "block" and ":", collapse whitespace runs, replace spaces
// with "_".
std::string normalize_section_name(std::string_view section);

// Assigns documentation to schema fields via the matching cascade
// (top-level direct, block-context, hierarchical fallback, path-based).
// Never fails: unmatched entries degrade to orphans. The page description
// and examples are carried onto the schema as well.
EnrichmentResult match_and_enrich(const RawSchemaDump& schema, const DocElements& elements,
                                  const std::string& page_description = "");

} // namespace iacbench::ingest
