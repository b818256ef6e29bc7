#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iacbench::ingest {

// Block occurrence bounds. max == nullopt means unbounded.
struct Cardinality {
    int min = 0;
    std::optional<int> max;

    bool operator==(const Cardinality&) const = default;
};

struct RawArgument {
    std::string name;
    std::string value_type;
    bool required = false;

    bool operator==(const RawArgument&) const = default;
};

struct RawBlock {
    std::string name;
    Cardinality cardinality;
    std::vector<RawArgument> arguments;
    std::vector<RawBlock> blocks;

    bool operator==(const RawBlock&) const = default;
};

struct RawAttribute {
    std::string name;
    std::string value_type;

    bool operator==(const RawAttribute&) const = default;
};

// One provider resource as extracted from a compiled-provider schema dump.
struct RawSchemaDump {
    std::string resource_name;
    std::vector<RawArgument> arguments;
    std::vector<RawBlock> blocks;
    std::vector<RawAttribute> attributes;

    bool operator==(const RawSchemaDump&) const = default;
};

// Parses the JSON schema-dump format documented in docs/formats.md.
// Raises ParseError naming the offending path on malformed input and
// SchemaError on invariant violations (missing resource name, duplicate
// names at one nesting level, min > max).
RawSchemaDump parse_schema_dump(std::string_view json_text);

std::string serialize_schema_dump(const RawSchemaDump& dump);

} // namespace iacbench::ingest
