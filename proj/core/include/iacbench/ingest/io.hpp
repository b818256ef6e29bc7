#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "iacbench/ingest/enrich.hpp"

namespace iacbench::ingest {

std::string enriched_schemas_to_json(const std::vector<EnrichedResourceSchema>& schemas);
std::vector<EnrichedResourceSchema> enriched_schemas_from_json(std::string_view json_text);

void save_enriched_schemas(const std::filesystem::path& path,
                           const std::vector<EnrichedResourceSchema>& schemas);
std::vector<EnrichedResourceSchema> load_enriched_schemas(const std::filesystem::path& path);

struct IngestStats {
    std::size_t resources = 0;
    std::size_t pages_skipped = 0;
    std::vector<std::string> warnings;
    std::size_t orphan_count = 0;
};

// Directory ingestion: one schema file and one doc page per resource, paired
// by resource name (schemas/<name>.json + docs/<name>.md). Pages that fail to
// parse are skipped with a warning; schemas without a page keep empty
// descriptions.
std::pair<std::vector<EnrichedResourceSchema>, IngestStats>
ingest_corpus(const std::filesystem::path& schema_dir, const std::filesystem::path& doc_dir);

} // namespace iacbench::ingest
