#include "iacbench/ingest/schema.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"

namespace iacbench::ingest {

namespace {

using nlohmann::json;

[[noreturn]] void fail_parse(const std::string& path, const std::string& what) {
    throw ParseError("schema dump: " + path + ": " + what);
}

std::string get_string(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_string()) fail_parse(path + "." + key, "expected string");
    return j[key].get<std::string>();
}

void check_unique_names(const std::vector<RawArgument>& args, const std::vector<RawBlock>& blocks,
                        const std::string& path) {
    std::set<std::string> seen;
    for (const auto& a : args) {
        if (!seen.insert(a.name).second) {
            throw SchemaError("schema dump: duplicate argument name '" + a.name + "' at " + path);
        }
    }
    for (const auto& b : blocks) {
        if (!seen.insert(b.name).second) {
            throw SchemaError("schema dump: duplicate name '" + b.name + "' at " + path);
        }
    }
}

std::vector<RawArgument> parse_arguments(const json& j, const std::string& path) {
    std::vector<RawArgument> args;
    if (!j.is_array()) fail_parse(path, "expected array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& entry = j[i];
        std::string entry_path = path + "[" + std::to_string(i) + "]";
        if (!entry.is_object()) fail_parse(entry_path, "expected object");
        RawArgument arg;
        arg.name = get_string(entry, "name", entry_path);
        if (arg.name.empty()) fail_parse(entry_path + ".name", "empty name");
        arg.value_type = entry.contains("type") ? get_string(entry, "type", entry_path) : "string";
        if (entry.contains("required")) {
            if (!entry["required"].is_boolean()) fail_parse(entry_path + ".required", "expected boolean");
            arg.required = entry["required"].get<bool>();
        }
        args.push_back(std::move(arg));
    }
    return args;
}

std::vector<RawBlock> parse_blocks(const json& j, const std::string& path);

RawBlock parse_block(const json& j, const std::string& path) {
    if (!j.is_object()) fail_parse(path, "expected object");
    RawBlock block;
    block.name = get_string(j, "name", path);
    if (block.name.empty()) fail_parse(path + ".name", "empty name");
    if (j.contains("min")) {
        if (!j["min"].is_number_integer()) fail_parse(path + ".min", "expected integer");
        block.cardinality.min = j["min"].get<int>();
        if (block.cardinality.min < 0) fail_parse(path + ".min", "negative min");
    }
    if (j.contains("max")) {
        const json& m = j["max"];
        if (m.is_string()) {
            if (m.get<std::string>() != "unbounded") fail_parse(path + ".max", "expected integer or \"unbounded\"");
        } else if (m.is_number_integer()) {
            int v = m.get<int>();
            if (v < 1) fail_parse(path + ".max", "max must be positive");
            block.cardinality.max = v;
        } else {
            fail_parse(path + ".max", "expected integer or \"unbounded\"");
        }
    }
    if (block.cardinality.max && block.cardinality.min > *block.cardinality.max) {
        throw SchemaError("schema dump: " + path + ": cardinality min > max");
    }
    if (j.contains("arguments")) block.arguments = parse_arguments(j["arguments"], path + ".arguments");
    if (j.contains("blocks")) block.blocks = parse_blocks(j["blocks"], path + ".blocks");
    check_unique_names(block.arguments, block.blocks, path);
    return block;
}

std::vector<RawBlock> parse_blocks(const json& j, const std::string& path) {
    std::vector<RawBlock> blocks;
    if (!j.is_array()) fail_parse(path, "expected array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        blocks.push_back(parse_block(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return blocks;
}

std::vector<RawAttribute> parse_attributes(const json& j, const std::string& path) {
    std::vector<RawAttribute> attrs;
    if (!j.is_array()) fail_parse(path, "expected array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& entry = j[i];
        std::string entry_path = path + "[" + std::to_string(i) + "]";
        if (!entry.is_object()) fail_parse(entry_path, "expected object");
        RawAttribute attr;
        attr.name = get_string(entry, "name", entry_path);
        if (attr.name.empty()) fail_parse(entry_path + ".name", "empty name");
        attr.value_type = entry.contains("type") ? get_string(entry, "type", entry_path) : "string";
        attrs.push_back(std::move(attr));
    }
    return attrs;
}

json argument_to_json(const RawArgument& a) {
    return json{{"name", a.name}, {"type", a.value_type}, {"required", a.required}};
}

json block_to_json(const RawBlock& b) {
    json j{{"name", b.name}, {"min", b.cardinality.min}};
    if (b.cardinality.max)
        j["max"] = *b.cardinality.max;
    else
        j["max"] = "unbounded";
    json args = json::array();
    for (const auto& a : b.arguments) args.push_back(argument_to_json(a));
    j["arguments"] = args;
    json blocks = json::array();
    for (const auto& nested : b.blocks) blocks.push_back(block_to_json(nested));
    j["blocks"] = blocks;
    return j;
}

} // namespace

RawSchemaDump parse_schema_dump(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ParseError("schema dump: $: invalid JSON");
    if (!j.is_object()) fail_parse("$", "expected object");

    RawSchemaDump dump;
    if (!j.contains("resource_name") || !j["resource_name"].is_string() ||
        j["resource_name"].get<std::string>().empty()) {
        throw SchemaError("schema dump: missing or empty resource_name");
    }
    dump.resource_name = j["resource_name"].get<std::string>();
    if (j.contains("arguments")) dump.arguments = parse_arguments(j["arguments"], "$.arguments");
    if (j.contains("blocks")) dump.blocks = parse_blocks(j["blocks"], "$.blocks");
    if (j.contains("attributes")) dump.attributes = parse_attributes(j["attributes"], "$.attributes");
    check_unique_names(dump.arguments, dump.blocks, "$");

    std::set<std::string> attr_names;
    for (const auto& a : dump.attributes) {
        if (!attr_names.insert(a.name).second) {
            throw SchemaError("schema dump: duplicate attribute name '" + a.name + "'");
        }
    }
    return dump;
}

std::string serialize_schema_dump(const RawSchemaDump& dump) {
    json j;
    j["resource_name"] = dump.resource_name;
    json args = json::array();
    for (const auto& a : dump.arguments) args.push_back(argument_to_json(a));
    j["arguments"] = args;
    json blocks = json::array();
    for (const auto& b : dump.blocks) blocks.push_back(block_to_json(b));
    j["blocks"] = blocks;
    json attrs = json::array();
    for (const auto& a : dump.attributes) {
        attrs.push_back(json{{"name", a.name}, {"type", a.value_type}});
    }
    j["attributes"] = attrs;
    return j.dump(2) + "\n";
}

} // namespace iacbench::ingest
