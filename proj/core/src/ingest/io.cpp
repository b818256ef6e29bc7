#include "iacbench/ingest/io.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"

namespace iacbench::ingest {

namespace {

using nlohmann::json;

json cardinality_to_json(const Cardinality& c) {
    json j;
    j["min"] = c.min;
    if (c.max)
        j["max"] = *c.max;
    else
        j["max"] = "unbounded";
    return j;
}

Cardinality cardinality_from_json(const json& j) {
    Cardinality c;
    c.min = j.at("min").get<int>();
    if (j.at("max").is_string())
        c.max = std::nullopt;
    else
        c.max = j.at("max").get<int>();
    return c;
}

json argument_to_json(const ArgumentSpec& a) {
    return json{{"name", a.name},     {"type", a.value_type}, {"required", a.required},
                {"description", a.description}, {"id", a.id},  {"resource", a.owning_resource}};
}

ArgumentSpec argument_from_json(const json& j) {
    ArgumentSpec a;
    a.name = j.at("name").get<std::string>();
    a.value_type = j.at("type").get<std::string>();
    a.required = j.at("required").get<bool>();
    a.description = j.at("description").get<std::string>();
    a.id = j.at("id").get<std::string>();
    a.owning_resource = j.at("resource").get<std::string>();
    return a;
}

json block_to_json(const BlockSpec& b) {
    json j;
    j["name"] = b.name;
    j["cardinality"] = cardinality_to_json(b.cardinality);
    j["description"] = b.description;
    j["id"] = b.id;
    j["resource"] = b.owning_resource;
    json args = json::array();
    for (const auto& a : b.nested_arguments) args.push_back(argument_to_json(a));
    j["arguments"] = args;
    json blocks = json::array();
    for (const auto& nested : b.nested_blocks) blocks.push_back(block_to_json(nested));
    j["blocks"] = blocks;
    return j;
}

BlockSpec block_from_json(const json& j) {
    BlockSpec b;
    b.name = j.at("name").get<std::string>();
    b.cardinality = cardinality_from_json(j.at("cardinality"));
    b.description = j.at("description").get<std::string>();
    b.id = j.at("id").get<std::string>();
    b.owning_resource = j.at("resource").get<std::string>();
    for (const auto& a : j.at("arguments")) b.nested_arguments.push_back(argument_from_json(a));
    for (const auto& nested : j.at("blocks")) b.nested_blocks.push_back(block_from_json(nested));
    return b;
}

json schema_to_json(const EnrichedResourceSchema& s) {
    json j;
    j["resource_name"] = s.resource_name;
    j["description"] = s.description;
    json args = json::array();
    for (const auto& a : s.arguments) args.push_back(argument_to_json(a));
    j["arguments"] = args;
    json blocks = json::array();
    for (const auto& b : s.blocks) blocks.push_back(block_to_json(b));
    j["blocks"] = blocks;
    json attrs = json::array();
    for (const auto& a : s.attributes) {
        attrs.push_back(json{{"name", a.name}, {"type", a.value_type}, {"description", a.description}});
    }
    j["attributes"] = attrs;
    json examples = json::array();
    for (const auto& e : s.examples) {
        examples.push_back(json{{"title", e.title}, {"code", e.code}, {"index", e.index}});
    }
    j["examples"] = examples;
    return j;
}

EnrichedResourceSchema schema_from_json(const json& j) {
    EnrichedResourceSchema s;
    s.resource_name = j.at("resource_name").get<std::string>();
    s.description = j.at("description").get<std::string>();
    for (const auto& a : j.at("arguments")) s.arguments.push_back(argument_from_json(a));
    for (const auto& b : j.at("blocks")) s.blocks.push_back(block_from_json(b));
    for (const auto& a : j.at("attributes")) {
        s.attributes.push_back({a.at("name").get<std::string>(), a.at("type").get<std::string>(),
                                a.at("description").get<std::string>()});
    }
    for (const auto& e : j.at("examples")) {
        s.examples.push_back({e.at("title").get<std::string>(), e.at("code").get<std::string>(),
                              e.at("index").get<int>()});
    }
    return s;
}

} // namespace

std::string enriched_schemas_to_json(const std::vector<EnrichedResourceSchema>& schemas) {
    json j = json::array();
    for (const auto& s : schemas) j.push_back(schema_to_json(s));
    return j.dump(2) + "\n";
}

std::vector<EnrichedResourceSchema> enriched_schemas_from_json(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("enriched schemas: invalid JSON array");
    std::vector<EnrichedResourceSchema> schemas;
    schemas.reserve(j.size());
    for (const auto& entry : j) schemas.push_back(schema_from_json(entry));
    return schemas;
}

void save_enriched_schemas(const std::filesystem::path& path,
                           const std::vector<EnrichedResourceSchema>& schemas) {
    fs::write_file(path, enriched_schemas_to_json(schemas));
}

std::vector<EnrichedResourceSchema> load_enriched_schemas(const std::filesystem::path& path) {
    return enriched_schemas_from_json(fs::read_file(path));
}

std::pair<std::vector<EnrichedResourceSchema>, IngestStats>
ingest_corpus(const std::filesystem::path& schema_dir, const std::filesystem::path& doc_dir) {
    IngestStats stats;
    std::vector<std::filesystem::path> schema_files;
    for (const auto& entry : std::filesystem::directory_iterator(schema_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            schema_files.push_back(entry.path());
        }
    }
    std::sort(schema_files.begin(), schema_files.end());

    std::vector<EnrichedResourceSchema> schemas;
    for (const auto& schema_path : schema_files) {
        RawSchemaDump dump = parse_schema_dump(fs::read_file(schema_path));
        std::filesystem::path doc_path = doc_dir / (dump.resource_name + ".md");

        DocElements elements;
        std::string description;
        if (std::filesystem::exists(doc_path)) {
            try {
                DocPage page = parse_doc_page(fs::read_file(doc_path));
                if (page.resource_name != dump.resource_name) {
                    stats.warnings.push_back("doc page " + doc_path.string() + " names resource '" +
                                             page.resource_name + "', expected '" + dump.resource_name +
                                             "'");
                }
                elements = extract_doc_elements(page);
                description = page.description;
            } catch (const IngestError& e) {
                ++stats.pages_skipped;
                stats.warnings.push_back(std::string("skipped ") + doc_path.string() + ": " + e.what());
            }
        } else {
            stats.warnings.push_back("no doc page for resource " + dump.resource_name);
        }

        EnrichmentResult enriched = match_and_enrich(dump, elements, description);
        stats.orphan_count += enriched.orphans.size();
        for (auto& w : enriched.warnings) stats.warnings.push_back(std::move(w));
        schemas.push_back(std::move(enriched.schema));
    }
    stats.resources = schemas.size();
    return {std::move(schemas), std::move(stats)};
}

} // namespace iacbench::ingest
