#include "fixtures.hpp"

#include <cassert>
#include <cstdio>

#include "iacbench/common/fs.hpp"
#include "iacbench/harness/outcome.hpp"
#include "iacbench/ingest/docpage.hpp"
#include "iacbench/ingest/schema.hpp"

namespace iacbench::testsupport {

namespace {

std::string pad3(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%03d", i);
    return buf;
}

std::string pad4(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d", i);
    return buf;
}

// per-resource sizing that hits the corpus totals exactly
int top_args_of(int i) { return i < 84 ? 10 : 9; }
int blocks_of(int i) { return i < 6 ? 7 : 6; }
int attrs_of(int i) { return i < 129 ? 3 : 2; }

// global index of block j of resource i (resource-major)
int global_block_index(int i, int j) {
    int base = i < 6 ? i * 7 : 6 * 7 + (i - 6) * 6;
    return base + j;
}

int block_args_of(int i, int j) { return global_block_index(i, j) < 119 ? 3 : 2; }

// documentation quotas consumed resource-major: the first N fields of each
// class carry descriptions
int top_args_before(int i) { return i < 84 ? i * 10 : 84 * 10 + (i - 84) * 9; }
int attrs_before(int i) { return i < 129 ? i * 3 : 129 * 3 + (i - 129) * 2; }
int block_args_before(int i, int j) {
    int g = global_block_index(i, j);
    return g < 119 ? g * 3 : 119 * 3 + (g - 119) * 2;
}

} // namespace

std::string corpus_resource_name(int i) { return "aws_fx_" + pad3(i); }

std::string corpus_schema_json(int i) {
    const std::string res = corpus_resource_name(i);
    std::string json = "{\n  \"resource_name\": \"" + res + "\",\n  \"arguments\": [\n";
    for (int j = 0; j < top_args_of(i); ++j) {
        json += "    {\"name\": \"arg_" + pad3(i) + "_" + std::to_string(j) +
                "\", \"type\": \"string\", \"required\": " + (j == 0 ? "true" : "false") + "}";
        json += j + 1 < top_args_of(i) ? ",\n" : "\n";
    }
    json += "  ],\n  \"blocks\": [\n";
    // block 1 nests inside block 0; the rest are top-level
    bool first = true;
    for (int j = 0; j < blocks_of(i); ++j) {
        if (j == 1) continue;
        if (!first) json += ",\n";
        first = false;
        std::string block = "    {\"name\": \"blk_" + pad3(i) + "_" + std::to_string(j) +
                            "\", \"min\": " + (j == 0 ? "1" : "0") + ", \"max\": " +
                            (j % 2 == 0 ? "\"unbounded\"" : "1") + ", \"arguments\": [";
        for (int k = 0; k < block_args_of(i, j); ++k) {
            if (k) block += ", ";
            block += "{\"name\": \"barg_" + pad3(i) + "_" + std::to_string(j) + "_" +
                     std::to_string(k) + "\", \"type\": \"string\", \"required\": " +
                     (k == 0 ? "true" : "false") + "}";
        }
        block += "]";
        if (j == 0 && blocks_of(i) > 1) {
            block += ", \"blocks\": [{\"name\": \"blk_" + pad3(i) +
                     "_1\", \"min\": 0, \"max\": 1, \"arguments\": [";
            for (int k = 0; k < block_args_of(i, 1); ++k) {
                if (k) block += ", ";
                block += "{\"name\": \"barg_" + pad3(i) + "_1_" + std::to_string(k) +
                         "\", \"type\": \"string\", \"required\": " + (k == 0 ? "true" : "false") + "}";
            }
            block += "]}]";
        }
        block += "}";
        json += block;
    }
    json += "\n  ],\n  \"attributes\": [\n";
    for (int k = 0; k < attrs_of(i); ++k) {
        json += "    {\"name\": \"attr_" + pad3(i) + "_" + std::to_string(k) +
                "\", \"type\": \"string\"}";
        json += k + 1 < attrs_of(i) ? ",\n" : "\n";
    }
    json += "  ]\n}\n";
    return json;
}

std::string corpus_doc_markdown(int i) {
    const std::string res = corpus_resource_name(i);
    std::string md = "# Resource: " + res + "\n\n";
    md += "Manages the fixture service " + pad3(i) + " configuration.\n\n";

    md += "## Example Usage\n\n";
    md += "```terraform\nresource \"" + res + "\" \"example\" {\n  arg_" + pad3(i) +
          "_0 = \"value\"\n}\n```\n\n";

    md += "## Argument Reference\n\n";
    int described_top = ReferenceCorpusTotals::top_args_described - top_args_before(i);
    for (int j = 0; j < top_args_of(i); ++j) {
        if (j >= described_top) break;
        md += "- `arg_" + pad3(i) + "_" + std::to_string(j) + "` - " +
              (j == 0 ? "(Required)" : "(Optional)") + " Controls setting " + std::to_string(j) +
              " of service " + pad3(i) + ".\n";
    }
    md += "\n";
    for (int j = 0; j < blocks_of(i); ++j) {
        int described_block = ReferenceCorpusTotals::block_args_described - block_args_before(i, j);
        if (described_block <= 0) continue;
        md += "### Blk " + pad3(i) + " " + std::to_string(j) + " Block\n\n";
        for (int k = 0; k < block_args_of(i, j); ++k) {
            if (k >= described_block) break;
            md += "- `barg_" + pad3(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "` - " +
                  (k == 0 ? "(Required)" : "(Optional)") + " Nested setting " + std::to_string(k) +
                  " of group " + std::to_string(j) + ".\n";
        }
        md += "\n";
    }

    md += "## Attribute Reference\n\n";
    int described_attrs = ReferenceCorpusTotals::attributes_described - attrs_before(i);
    for (int k = 0; k < attrs_of(i); ++k) {
        if (k >= described_attrs) break;
        md += "- `attr_" + pad3(i) + "_" + std::to_string(k) + "` - Exported value " +
              std::to_string(k) + " of service " + pad3(i) + ".\n";
    }
    md += "\n";
    return md;
}

void write_reference_corpus(const std::filesystem::path& dir) {
    for (int i = 0; i < ReferenceCorpusTotals::resources; ++i) {
        fs::write_file(dir / "schemas" / (corpus_resource_name(i) + ".json"), corpus_schema_json(i));
        fs::write_file(dir / "docs" / (corpus_resource_name(i) + ".md"), corpus_doc_markdown(i));
    }
}

std::vector<ingest::EnrichedResourceSchema> reference_corpus_enriched() {
    std::vector<ingest::EnrichedResourceSchema> schemas;
    schemas.reserve(ReferenceCorpusTotals::resources);
    for (int i = 0; i < ReferenceCorpusTotals::resources; ++i) {
        auto dump = ingest::parse_schema_dump(corpus_schema_json(i));
        auto page = ingest::parse_doc_page(corpus_doc_markdown(i));
        auto elements = ingest::extract_doc_elements(page);
        auto enriched = ingest::match_and_enrich(dump, elements, page.description);
        schemas.push_back(std::move(enriched.schema));
    }
    return schemas;
}

std::vector<kg::ReferenceCandidate> corpus_reference_candidates() {
    std::vector<kg::ReferenceCandidate> refs;
    refs.reserve(ReferenceCorpusTotals::reference_edges);
    for (int i = 0; i < ReferenceCorpusTotals::resources; ++i) {
        int count = 37 + (i < 81 ? 1 : 0);
        for (int j = 0; j < count; ++j) {
            int target = (i + 1 + j) % ReferenceCorpusTotals::resources;
            kg::ReferenceCandidate ref;
            ref.source_resource = corpus_resource_name(i);
            ref.source_argument = "arg_" + pad3(i) + "_" + std::to_string(j % top_args_of(i));
            ref.target_resource = corpus_resource_name(target);
            ref.target_element = "attr_" + pad3(target) + "_" + std::to_string(j % 2);
            refs.push_back(std::move(ref));
        }
    }
    return refs;
}

// ---------------------------------------------------------------------------
// Baseline logs
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, int>>& baseline_label_counts() {
    static const std::vector<std::pair<std::string, int>> counts = {
        {"arg_unsupported", 326}, {"arg_missing", 140},   {"arg_bad_value", 13},
        {"arg_reserved", 2},      {"arg_conflict", 3},    {"arg_duplicate", 4},
        {"attr_missing", 3},      {"attr_misuse", 5},     {"block_unsupported", 104},
        {"block_missing", 64},    {"block_toomany", 1},   {"res_unknown_type", 44},
        {"res_invalid_ref", 10},  {"res_duplicate", 12},  {"env_file", 23},
        {"prov_unconfigured", 1}, {"prov_duplicate", 6},  {"version_invalid", 1},
        {"syntax_language", 4},   {"syntax_format", 8},
    };
    return counts;
}

namespace {

struct StanzaSpec {
    std::string label;
    int occurrence = 0; // occurrence index of this label across the corpus
};

// element naming: the first 17 unsupported arguments and first 2 unsupported
// blocks belong to "legacy" resources covered by deprecation entries; the
// rest reference elements no changelog ever documented
std::string stanza_for(const StanzaSpec& spec, int line) {
    const std::string& label = spec.label;
    const int n = spec.occurrence;
    auto loc = [&](const std::string& res) {
        return "  on main.tf line " + std::to_string(line) + ", in resource \"" + res +
               "\" \"this\":\n";
    };

    if (label == "arg_unsupported") {
        std::string res = n < BaselineLogTotals::deprecated_args
                              ? "aws_legacy_res_" + std::to_string(n)
                              : "aws_app_res_" + std::to_string(n % 50);
        std::string arg = n < BaselineLogTotals::deprecated_args ? "legacy_arg_" + std::to_string(n)
                                                                 : "ghost_arg_" + std::to_string(n);
        return "Error: Unsupported argument\n\n" + loc(res) + "  " + std::to_string(line) + ":     " +
               arg + " = \"value\"\n\nAn argument named \"" + arg + "\" is not expected here.\n";
    }
    if (label == "arg_missing") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Missing required argument\n\n" + loc(res) + "\nThe argument \"needed_arg_" +
               std::to_string(n % 9) + "\" is required, but no definition was found.\n";
    }
    if (label == "arg_bad_value") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Invalid value for argument\n\n" + loc(res) +
               "\nInvalid value for \"mode\": the value \"turbo\" is not supported.\n";
    }
    if (label == "arg_reserved") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Reserved argument name in resource block\n\n" + loc(res) +
               "\nThe argument name \"count\" is a reserved argument name.\n";
    }
    if (label == "arg_conflict") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Conflicting configuration arguments\n\n" + loc(res) +
               "\n\"ipv6_cidr_block\": conflicts with cidr_block\n";
    }
    if (label == "arg_duplicate") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Duplicate argument\n\n" + loc(res) +
               "\nThe argument \"region\" was already set at main.tf:" + std::to_string(line - 2) +
               ". Each argument may be set only once.\n";
    }
    if (label == "attr_missing") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Unsupported attribute\n\n" + loc(res) +
               "\nThis object has no argument, nested block, or exported attribute named \"arn_old\".\n";
    }
    if (label == "attr_misuse") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Invalid attribute usage\n\n" + loc(res) +
               "\nThe \"id\" attribute is used in the wrong way in this expression.\n";
    }
    if (label == "block_unsupported") {
        std::string res = n < BaselineLogTotals::deprecated_blocks
                              ? "aws_legacy_res_b" + std::to_string(n)
                              : "aws_app_res_" + std::to_string(n % 50);
        std::string block = n < BaselineLogTotals::deprecated_blocks
                                ? "legacy_block_" + std::to_string(n)
                                : "ghost_block_" + std::to_string(n);
        return "Error: Unsupported block type\n\n" + loc(res) + "  " + std::to_string(line) + ":   " +
               block + " {\n\nBlocks of type \"" + block + "\" are not expected here.\n";
    }
    if (label == "block_missing") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Insufficient required_group blocks\n\n" + loc(res) +
               "\nAt least 1 \"required_group\" blocks are required.\n";
    }
    if (label == "block_toomany") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Too many limits blocks\n\n" + loc(res) +
               "\nNo more than 1 \"limits\" blocks are allowed\n";
    }
    if (label == "res_unknown_type") {
        std::string res = "aws_ghost_res_" + std::to_string(n);
        return "Error: Invalid resource type\n\n" + loc(res) +
               "\nThe provider hashicorp/aws does not support resource type \"" + res + "\".\n";
    }
    if (label == "res_invalid_ref") {
        return "Error: Reference to undeclared resource\n\n  on main.tf line " +
               std::to_string(line) + ":\n\nA managed resource \"aws_app_res_" +
               std::to_string(n % 50) +
               "\" \"other\" has not been declared in the root module.\n";
    }
    if (label == "res_duplicate") {
        std::string res = "aws_app_res_" + std::to_string(n % 50);
        return "Error: Duplicate resource \"" + res + "\" configuration\n\n" + loc(res) + "\nA " +
               res + " resource named \"this\" was already declared at main.tf:" +
               std::to_string(line - 4) + ".\n";
    }
    if (label == "env_file") {
        return "Error: Invalid function argument\n\n  on main.tf line " + std::to_string(line) +
               ", in resource \"aws_app_res_" + std::to_string(n % 50) +
               "\" \"this\":\n\nInvalid value for \"path\" parameter: no file exists at "
               "\"./assets/payload_" +
               std::to_string(n) + ".zip\".\n";
    }
    if (label == "prov_unconfigured") {
        return "Error: Provider configuration not present\n\nTo work with aws_app_res_0.this its "
               "original provider configuration is required, but it has been removed.\n";
    }
    if (label == "prov_duplicate") {
        return "Error: Duplicate provider configuration\n\n  on main.tf line " +
               std::to_string(line) +
               ":\n\nA default provider configuration for \"aws\" was already given.\n";
    }
    if (label == "version_invalid") {
        return "Error: Invalid version constraint\n\n  on main.tf line " + std::to_string(line) +
               ":\n\nVersion must be specified as a string of version constraints.\n";
    }
    if (label == "syntax_language") {
        return "Error: Invalid expression\n\n  on main.tf line " + std::to_string(line) +
               ":\n\nExpected the start of an expression, but found an invalid expression token.\n";
    }
    if (label == "syntax_format") {
        return "Error: Invalid name\n\n  on main.tf line " + std::to_string(line) +
               ":\n\nName must start with a letter and may contain only letters, digits, "
               "underscores, and dashes.\n";
    }
    assert(false && "unknown label");
    return {};
}

// errors-per-script distribution: 120x1 + 90x2 + 75x3 + 29x8 + 1x17 = 774
int errors_of_script(int s) {
    if (s < 120) return 1;
    if (s < 210) return 2;
    if (s < 285) return 3;
    if (s < 314) return 8;
    return 17;
}

} // namespace

std::vector<std::string> write_baseline_logs(const std::filesystem::path& dir) {
    // flat label stream consumed script by script
    std::vector<std::string> stream;
    stream.reserve(BaselineLogTotals::total_errors);
    for (const auto& [label, count] : baseline_label_counts()) {
        for (int n = 0; n < count; ++n) stream.push_back(label);
    }
    assert(static_cast<int>(stream.size()) == BaselineLogTotals::total_errors);

    std::map<std::string, int> occurrence;
    std::vector<std::string> script_ids;
    std::size_t cursor = 0;
    for (int s = 0; s < BaselineLogTotals::failed_scripts; ++s) {
        std::string id = "s" + pad4(s + 1);
        script_ids.push_back(id);
        std::string log;
        int count = errors_of_script(s);
        for (int e = 0; e < count; ++e) {
            StanzaSpec spec;
            spec.label = stream[cursor++];
            spec.occurrence = occurrence[spec.label]++;
            if (e > 0) log += "\n";
            log += stanza_for(spec, 10 + 3 * e);
        }
        fs::write_file(dir / (id + ".log"), log);
    }
    assert(cursor == stream.size());

    for (int s = 0; s < BaselineLogTotals::passing_scripts; ++s) {
        std::string id = "p" + pad4(s + 1);
        script_ids.push_back(id);
        fs::write_file(dir / (id + ".log"), "");
    }
    return script_ids;
}

std::string baseline_changelog_markdown() {
    std::string md = "# CHANGELOG\n\n";
    md += "## 6.1.0 (December 2024)\n\n";
    // post-cutoff deprecation: must not flip attribution at the 2023-10 cutoff
    md += "* resource/aws_app_res_20: remove deprecated `ghost_arg_20` argument\n";
    md += "* resource/aws_legacy_res_0: clarify `legacy_arg_0` documentation\n\n";
    md += "## 5.0.0 (May 2023)\n\n";
    for (int n = 0; n < BaselineLogTotals::deprecated_args; ++n) {
        md += "* resource/aws_legacy_res_" + std::to_string(n) + ": remove deprecated `legacy_arg_" +
              std::to_string(n) + "` argument\n";
    }
    for (int n = 0; n < BaselineLogTotals::deprecated_blocks; ++n) {
        md += "* resource/aws_legacy_res_b" + std::to_string(n) +
              ": remove deprecated `legacy_block_" + std::to_string(n) + "` block\n";
    }
    md += "\n## 4.2.0 (January 2023)\n\n";
    md += "* resource/aws_app_res_7: add `shiny_arg` argument\n";
    md += "* resource/aws_other: improve retries\n";
    return md;
}

// ---------------------------------------------------------------------------
// Six-method outcomes
// ---------------------------------------------------------------------------

namespace {

struct FixtureBlock {
    int count;
    std::array<int, 6> tv; // membership per method
    std::array<int, 6> k;  // overall (tv and iv) passes within the block
};

// Joint TV/IV outcome structure across the six methods. The block membership
// realizes the published marginals and joint counts; k gives the per-block
// number of prompts (taken from the front) that also pass intent validation.
const std::array<FixtureBlock, 19> kSixMethodBlocks = {{
    {6, {1, 0, 0, 0, 0, 0}, {2, 0, 0, 0, 0, 0}},
    {6, {0, 1, 0, 1, 1, 1}, {0, 2, 0, 2, 2, 3}},
    {2, {0, 1, 0, 1, 0, 1}, {0, 0, 0, 0, 0, 1}},
    {2, {0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 2}},
    {11, {0, 1, 0, 0, 0, 0}, {0, 4, 0, 0, 0, 0}},
    {51, {0, 0, 1, 1, 1, 1}, {0, 0, 30, 35, 38, 35}},
    {14, {1, 1, 0, 0, 0, 0}, {8, 10, 0, 0, 0, 0}},
    {30, {1, 0, 1, 1, 1, 1}, {14, 0, 16, 20, 18, 17}},
    {126, {0, 1, 1, 1, 1, 1}, {0, 95, 100, 110, 107, 102}},
    {15, {0, 1, 1, 1, 1, 0}, {0, 10, 8, 6, 7, 0}},
    {5, {0, 1, 1, 0, 1, 1}, {0, 3, 2, 0, 3, 2}},
    {15, {0, 1, 1, 0, 0, 1}, {0, 3, 4, 0, 0, 6}},
    {5, {0, 1, 1, 0, 0, 0}, {0, 3, 2, 0, 0, 0}},
    {120, {1, 1, 1, 1, 1, 1}, {100, 110, 105, 95, 98, 102}},
    {15, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 8, 6, 0}},
    {10, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 5, 0, 6}},
    {10, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 4, 0, 0}},
    {12, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 7, 0}},
    {2, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
}};

} // namespace

std::array<stats::MethodOutcomes, 6> six_method_outcomes() {
    std::array<stats::MethodOutcomes, 6> methods;
    for (std::size_t m = 0; m < 6; ++m) methods[m].label = kSixMethodNames[m];

    int prompt = 0;
    for (const auto& block : kSixMethodBlocks) {
        for (int p = 0; p < block.count; ++p) {
            ++prompt;
            std::string id = "p" + pad4(prompt);
            for (std::size_t m = 0; m < 6; ++m) {
                stats::PromptOutcome outcome;
                outcome.tv_pass = block.tv[m] != 0;
                outcome.iv_pass = outcome.tv_pass && p < block.k[m];
                methods[m].by_prompt[id] = outcome;
            }
        }
    }
    assert(prompt == 457);
    return methods;
}

void write_six_method_experiments(const std::filesystem::path& root) {
    auto methods = six_method_outcomes();
    for (std::size_t m = 0; m < methods.size(); ++m) {
        std::filesystem::path dir = root / kSixMethodNames[m];
        fs::write_file(dir / "experiment.json",
                       std::string("{\n  \"name\": \"") + kSixMethodNames[m] + "\"\n}\n");
        for (const auto& [id, outcome] : methods[m].by_prompt) {
            harness::ValidationOutcome record;
            record.script_id = id;
            record.tv_status = outcome.tv_pass ? harness::StageStatus::Pass : harness::StageStatus::Fail;
            record.iv_status = !outcome.tv_pass ? harness::StageStatus::NotRun
                               : outcome.iv_pass ? harness::StageStatus::Pass
                                                 : harness::StageStatus::Fail;
            fs::write_file(dir / "outcomes" / (id + ".json"),
                           harness::outcome_to_json(record, "", ""));
        }
    }
}

// ---------------------------------------------------------------------------
// Retrieval fixtures
// ---------------------------------------------------------------------------

namespace {

ingest::EnrichedResourceSchema enrich_from(const std::string& schema_json,
                                           const std::string& doc_markdown) {
    auto dump = ingest::parse_schema_dump(schema_json);
    auto page = ingest::parse_doc_page(doc_markdown);
    auto elements = ingest::extract_doc_elements(page);
    return ingest::match_and_enrich(dump, elements, page.description).schema;
}

} // namespace

std::vector<ingest::EnrichedResourceSchema> secondary_artifacts_schemas() {
    std::string build_schema = R"json({
      "resource_name": "aws_codebuild_project",
      "arguments": [
        {"name": "name", "type": "string", "required": true},
        {"name": "service_role", "type": "string", "required": true},
        {"name": "badge_enabled", "type": "bool", "required": false},
        {"name": "build_timeout", "type": "number", "required": false},
        {"name": "description", "type": "string", "required": false}
      ],
      "blocks": [
        {"name": "artifacts", "min": 1, "max": 1, "arguments": [
          {"name": "type", "type": "string", "required": true},
          {"name": "location", "type": "string", "required": false}
        ]},
        {"name": "secondary_artifacts", "min": 0, "max": "unbounded", "arguments": [
          {"name": "artifact_identifier", "type": "string", "required": true},
          {"name": "type", "type": "string", "required": true},
          {"name": "location", "type": "string", "required": false}
        ]},
        {"name": "logs_config", "min": 0, "max": 1, "arguments": [
          {"name": "status", "type": "string", "required": false}
        ]}
      ],
      "attributes": [
        {"name": "arn", "type": "string"},
        {"name": "id", "type": "string"}
      ]
    })json";
    std::string build_doc =
        "# Resource: aws_codebuild_project\n\n"
        "Provides a build project for compiling sources and producing artifacts.\n\n"
        "## Example Usage\n\n"
        "```terraform\nresource \"aws_codebuild_project\" \"example\" {\n  name = \"demo\"\n}\n```\n\n"
        "### With Secondary Artifacts\n\n"
        "```terraform\nresource \"aws_codebuild_project\" \"multi\" {\n  name = \"multi\"\n  "
        "secondary_artifacts {\n    artifact_identifier = \"extra\"\n  }\n}\n```\n\n"
        "## Argument Reference\n\n"
        "- `name` - (Required) Name of the build project.\n"
        "- `service_role` - (Required) Service role for the build runner.\n"
        "- `badge_enabled` - (Optional) Enables the public build badge.\n"
        "- `build_timeout` - (Optional) Minutes before the build times out.\n"
        "- `description` - (Optional) Short description of the project.\n\n"
        "### Artifacts Block\n\n"
        "- `type` - (Required) Primary artifact output type.\n"
        "- `location` - (Optional) Output bucket for the primary artifact.\n\n"
        "### Secondary Artifacts Block\n\n"
        "- `artifact_identifier` - (Required) Unique identifier of this secondary artifact.\n"
        "- `type` - (Required) Output type for the secondary artifacts set.\n"
        "- `location` - (Optional) Output location for secondary artifacts.\n\n"
        "### Logs Config Block\n\n"
        "- `status` - (Optional) Toggles the log group delivery.\n\n"
        "## Attribute Reference\n\n"
        "- `arn` - ARN of the build project.\n"
        "- `id` - Project identifier.\n";

    std::string bucket_schema = R"json({
      "resource_name": "aws_s3_bucket",
      "arguments": [
        {"name": "bucket", "type": "string", "required": true},
        {"name": "force_destroy", "type": "bool", "required": false}
      ],
      "blocks": [],
      "attributes": [{"name": "arn", "type": "string"}, {"name": "id", "type": "string"}]
    })json";
    std::string bucket_doc =
        "# Resource: aws_s3_bucket\n\n"
        "Provides a storage bucket.\n\n"
        "## Example Usage\n\n"
        "```terraform\nresource \"aws_s3_bucket\" \"b\" {\n  bucket = \"mine\"\n}\n```\n\n"
        "## Argument Reference\n\n"
        "- `bucket` - (Required) Name of the bucket.\n"
        "- `force_destroy` - (Optional) Delete all objects on destroy.\n\n"
        "## Attribute Reference\n\n"
        "- `arn` - ARN of the bucket.\n"
        "- `id` - Name of the bucket.\n";

    return {enrich_from(build_schema, build_doc), enrich_from(bucket_schema, bucket_doc)};
}

std::vector<ingest::EnrichedResourceSchema> reference_chain_schemas() {
    std::string instance_schema = R"json({
      "resource_name": "aws_instance",
      "arguments": [
        {"name": "ami", "type": "string", "required": true},
        {"name": "instance_type", "type": "string", "required": true},
        {"name": "subnet_id", "type": "string", "required": false},
        {"name": "tags", "type": "map(string)", "required": false}
      ],
      "blocks": [],
      "attributes": [{"name": "id", "type": "string"}, {"name": "arn", "type": "string"}]
    })json";
    std::string instance_doc =
        "# Resource: aws_instance\n\n"
        "Provides a virtual machine instance.\n\n"
        "## Example Usage\n\n"
        "```terraform\nresource \"aws_instance\" \"web\" {\n  ami = \"ami-123\"\n  instance_type = "
        "\"t3.micro\"\n}\n```\n\n"
        "## Argument Reference\n\n"
        "- `ami` - (Required) Machine image to launch.\n"
        "- `instance_type` - (Required) Instance size to launch.\n"
        "- `subnet_id` - (Optional) Subnet in which to launch the instance.\n"
        "- `tags` - (Optional) Tags for the instance.\n\n"
        "## Attribute Reference\n\n"
        "- `id` - Instance identifier.\n"
        "- `arn` - Instance ARN.\n";

    std::string subnet_schema = R"json({
      "resource_name": "aws_subnet",
      "arguments": [
        {"name": "vpc_id", "type": "string", "required": true},
        {"name": "cidr_block", "type": "string", "required": true},
        {"name": "map_public_ip_on_launch", "type": "bool", "required": false}
      ],
      "blocks": [],
      "attributes": [{"name": "id", "type": "string"}, {"name": "arn", "type": "string"}]
    })json";
    std::string subnet_doc =
        "# Resource: aws_subnet\n\n"
        "Provides a network subnet.\n\n"
        "## Example Usage\n\n"
        "```terraform\nresource \"aws_subnet\" \"a\" {\n  vpc_id = \"vpc-1\"\n  cidr_block = "
        "\"10.0.1.0/24\"\n}\n```\n\n"
        "## Argument Reference\n\n"
        "- `vpc_id` - (Required) Network in which to create the subnet.\n"
        "- `cidr_block` - (Required) Address range of the subnet.\n"
        "- `map_public_ip_on_launch` - (Optional) Assign public addresses on launch.\n\n"
        "## Attribute Reference\n\n"
        "- `id` - Subnet identifier.\n"
        "- `arn` - Subnet ARN.\n";

    std::string vpc_schema = R"json({
      "resource_name": "aws_vpc",
      "arguments": [
        {"name": "cidr_block", "type": "string", "required": true},
        {"name": "enable_dns_support", "type": "bool", "required": false}
      ],
      "blocks": [],
      "attributes": [{"name": "id", "type": "string"}, {"name": "arn", "type": "string"}]
    })json";
    std::string vpc_doc =
        "# Resource: aws_vpc\n\n"
        "Provides a private network.\n\n"
        "## Example Usage\n\n"
        "```terraform\nresource \"aws_vpc\" \"main\" {\n  cidr_block = \"10.0.0.0/16\"\n}\n```\n\n"
        "## Argument Reference\n\n"
        "- `cidr_block` - (Required) Address range of the network.\n"
        "- `enable_dns_support` - (Optional) Enables DNS resolution inside the network.\n\n"
        "## Attribute Reference\n\n"
        "- `id` - Network identifier.\n"
        "- `arn` - Network ARN.\n";

    return {enrich_from(instance_schema, instance_doc), enrich_from(subnet_schema, subnet_doc),
            enrich_from(vpc_schema, vpc_doc)};
}

std::vector<kg::ReferenceCandidate> reference_chain_candidates() {
    return {
        {"aws_instance", "subnet_id", "aws_subnet", "id"},
        {"aws_subnet", "vpc_id", "aws_vpc", "id"},
    };
}

RunFixture write_method_run_fixture(const std::filesystem::path& dir, std::size_t method_index) {
    auto methods = six_method_outcomes();
    const auto& outcomes = methods.at(method_index).by_prompt;

    RunFixture fixture;
    fixture.prompt_set = dir / "prompts";
    fixture.responses = dir / "responses";
    fixture.total = static_cast<int>(outcomes.size());

    for (const auto& [id, outcome] : outcomes) {
        // prompt text carries a PROMPT-<n> marker for the scripted provider
        std::string number = id.substr(1);
        fs::write_file(fixture.prompt_set / id / "prompt.txt",
                       "PROMPT-" + number + ": benchmark case " + id + "\n");
        fs::write_file(fixture.prompt_set / id / "policy.rego",
                       "package main\n\ndefault allow := false\n");
        std::string reply;
        if (outcome.tv_pass) {
            ++fixture.tv_pass;
            reply = outcome.iv_pass ? "# INTENT_OK\n" : "";
            reply += "resource \"aws_case\" \"" + id + "\" {}\n";
            if (outcome.iv_pass) ++fixture.iv_pass;
        }
        fs::write_file(fixture.responses / ("PROMPT-" + number + ".txt"), reply);
    }
    return fixture;
}

RunFixture write_run_fixture(const std::filesystem::path& dir, int prompts) {
    RunFixture fixture;
    fixture.prompt_set = dir / "prompts";
    fixture.responses = dir / "responses";
    fixture.total = prompts;

    for (int n = 1; n <= prompts; ++n) {
        std::string id = "p" + pad4(n);
        fs::write_file(fixture.prompt_set / id / "prompt.txt",
                       "PROMPT-" + pad4(n) + ": create fixture resource number " +
                           std::to_string(n) + "\n");
        fs::write_file(fixture.prompt_set / id / "policy.rego",
                       "package main\n\ndefault allow := false\n");

        std::string reply;
        if (n % 3 == 0) {
            reply = ""; // empty generation: fails technical validation
        } else if (n % 5 == 0) {
            reply = "resource \"aws_fixture\" \"r" + std::to_string(n) + "\" {}\n"; // no marker
            ++fixture.tv_pass;
        } else {
            reply = "# INTENT_OK\nresource \"aws_fixture\" \"r" + std::to_string(n) + "\" {}\n";
            ++fixture.tv_pass;
            ++fixture.iv_pass;
        }
        fs::write_file(fixture.responses / ("PROMPT-" + pad4(n) + ".txt"), reply);
    }
    return fixture;
}

} // namespace iacbench::testsupport
