#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "temp_dir.hpp"

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/ingest/coverage.hpp"
#include "iacbench/ingest/docpage.hpp"
#include "iacbench/ingest/enrich.hpp"
#include "iacbench/ingest/io.hpp"
#include "iacbench/ingest/schema.hpp"

using namespace iacbench;
using namespace iacbench::testsupport;

namespace {

// random schema dumps for round-trip and structural properties
ingest::RawSchemaDump random_dump(std::mt19937& rng, int max_depth = 2) {
    std::uniform_int_distribution<int> small(0, 3);
    int counter = 0;
    std::function<ingest::RawBlock(int)> make_block = [&](int depth) {
        ingest::RawBlock block;
        block.name = "blk" + std::to_string(counter++);
        block.cardinality.min = small(rng) % 2;
        if (small(rng) != 0) block.cardinality.max = block.cardinality.min + 1 + small(rng);
        int args = small(rng);
        for (int i = 0; i < args; ++i) {
            block.arguments.push_back(
                {"a" + std::to_string(counter++), "string", small(rng) % 2 == 0});
        }
        if (depth < max_depth) {
            int nested = small(rng) % 2;
            for (int i = 0; i < nested; ++i) block.blocks.push_back(make_block(depth + 1));
        }
        return block;
    };

    ingest::RawSchemaDump dump;
    dump.resource_name = "aws_rand_res";
    int args = 1 + small(rng);
    for (int i = 0; i < args; ++i) {
        dump.arguments.push_back({"arg" + std::to_string(counter++), "string", small(rng) % 2 == 0});
    }
    int blocks = small(rng);
    for (int i = 0; i < blocks; ++i) dump.blocks.push_back(make_block(0));
    int attrs = small(rng);
    for (int i = 0; i < attrs; ++i) {
        dump.attributes.push_back({"at" + std::to_string(counter++), "string"});
    }
    return dump;
}

// skeleton comparison ignoring descriptions
void check_same_skeleton(const ingest::BlockSpec& enriched, const ingest::BlockSpec& skeleton) {
    CHECK(enriched.name == skeleton.name);
    CHECK(enriched.cardinality == skeleton.cardinality);
    CHECK(enriched.id == skeleton.id);
    REQUIRE(enriched.nested_arguments.size() == skeleton.nested_arguments.size());
    for (std::size_t i = 0; i < enriched.nested_arguments.size(); ++i) {
        CHECK(enriched.nested_arguments[i].name == skeleton.nested_arguments[i].name);
        CHECK(enriched.nested_arguments[i].required == skeleton.nested_arguments[i].required);
        CHECK(enriched.nested_arguments[i].id == skeleton.nested_arguments[i].id);
    }
    REQUIRE(enriched.nested_blocks.size() == skeleton.nested_blocks.size());
    for (std::size_t i = 0; i < enriched.nested_blocks.size(); ++i) {
        check_same_skeleton(enriched.nested_blocks[i], skeleton.nested_blocks[i]);
    }
}

} // namespace

TEST_CASE("parse_schema_dump: minimal well-formed dump") {
    auto dump = ingest::parse_schema_dump(
        R"json({"resource_name": "aws_thing", "arguments": [{"name": "name", "type": "string", "required": true}]})json");
    CHECK(dump.resource_name == "aws_thing");
    REQUIRE(dump.arguments.size() == 1);
    CHECK(dump.arguments[0].name == "name");
    CHECK(dump.arguments[0].required);
    CHECK(dump.blocks.empty());
}

TEST_CASE("parse_schema_dump: nested block with unbounded cardinality survives a round trip") {
    std::string json = R"json({
      "resource_name": "aws_security_group",
      "arguments": [{"name": "name", "type": "string", "required": true}],
      "blocks": [{"name": "ingress", "min": 0, "max": "unbounded", "arguments": [
        {"name": "from_port", "type": "number", "required": true}]}],
      "attributes": [{"name": "id", "type": "string"}]
    })json";
    auto dump = ingest::parse_schema_dump(json);
    REQUIRE(dump.blocks.size() == 1);
    CHECK(dump.blocks[0].cardinality.min == 0);
    CHECK_FALSE(dump.blocks[0].cardinality.max.has_value()); // unbounded
    CHECK_FALSE(dump.blocks[0].cardinality.min >= 1);        // block not required
    REQUIRE(dump.blocks[0].arguments.size() == 1);
    CHECK(dump.blocks[0].arguments[0].required);

    auto reparsed = ingest::parse_schema_dump(ingest::serialize_schema_dump(dump));
    CHECK(reparsed == dump);
}

TEST_CASE("parse_schema_dump round-trip on random dumps") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto dump = random_dump(rng);
        auto reparsed = ingest::parse_schema_dump(ingest::serialize_schema_dump(dump));
        CHECK(reparsed == dump);
    }
}

TEST_CASE("parse_schema_dump error paths") {
    CHECK_THROWS_AS(ingest::parse_schema_dump("not json"), ParseError);
    CHECK_THROWS_AS(ingest::parse_schema_dump(R"json({"arguments": []})json"), SchemaError);
    // duplicate argument name at one level
    CHECK_THROWS_AS(ingest::parse_schema_dump(R"json({"resource_name": "r", "arguments": [
        {"name": "a", "type": "string", "required": true},
        {"name": "a", "type": "string", "required": false}]})json"),
                    SchemaError);
    // min > max
    CHECK_THROWS_AS(ingest::parse_schema_dump(R"json({"resource_name": "r",
        "blocks": [{"name": "b", "min": 3, "max": 1}]})json"),
                    SchemaError);
    // offending path named
    try {
        ingest::parse_schema_dump(R"json({"resource_name": "r", "arguments": [{"name": 3}]})json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("$.arguments[0]") != std::string::npos);
    }
}

TEST_CASE("parse_doc_page applies the resource-heading rule") {
    auto page = ingest::parse_doc_page(
        "# Resource: aws_s3_bucket\nProvides a bucket.\n## Argument Reference\n");
    CHECK(page.resource_name == "aws_s3_bucket");
    CHECK(page.description == "Provides a bucket.");
}

TEST_CASE("parse_doc_page keeps subsection structure") {
    std::string md = "# Resource: aws_x\nIntro.\n## Argument Reference\nBody.\n"
                     "### One\n- `a` - A.\n### Two\n- `b` - B.\n### Three\n- `c` - C.\n";
    auto page = ingest::parse_doc_page(md);
    int level3 = 0;
    for (const auto& s : page.sections) {
        if (s.heading_level == 3) ++level3;
    }
    CHECK(level3 == 3);
    CHECK(page.sections.front().heading_level == 1);
}

TEST_CASE("parse_doc_page rejects empty and heading-less pages") {
    CHECK_THROWS_AS(ingest::parse_doc_page(""), IngestError);
    CHECK_THROWS_AS(ingest::parse_doc_page("   \n\n  "), IngestError);
    CHECK_THROWS_AS(ingest::parse_doc_page("## Argument Reference\n- `a` - A.\n"), IngestError);
}

TEST_CASE("extract_doc_elements: bullets, section context, attribute entries") {
    std::string md =
        "# Resource: aws_bucket\nStores objects.\n\n"
        "## Argument Reference\n\n"
        "- `bucket` - (Required) Name of the bucket.\n"
        "- `acl` - (Optional) Canned ACL\n  applied to the bucket.\n\n"
        "### Website Block\n\n"
        "- `index_document` - (Required) Index page.\n\n"
        "## Attribute Reference\n\n"
        "- `arn` - ARN of the bucket.\n";
    auto elements = ingest::extract_doc_elements(ingest::parse_doc_page(md));
    REQUIRE(elements.arg_descriptions.size() == 3);
    CHECK(elements.arg_descriptions[0].section_context == "top-level");
    CHECK(elements.arg_descriptions[0].name == "bucket");
    CHECK(elements.arg_descriptions[0].text == "(Required) Name of the bucket.");
    // continuation line folded into the bullet
    CHECK(elements.arg_descriptions[1].text == "(Optional) Canned ACL applied to the bucket.");
    CHECK(elements.arg_descriptions[2].section_context == "Website Block");
    REQUIRE(elements.attr_descriptions.size() == 1);
    CHECK(elements.attr_descriptions[0].name == "arn");
}

TEST_CASE("extract_doc_elements: example titles per the extraction rule") {
    std::string md = "# Resource: aws_x\nDoc.\n\n## Example Usage\n\n"
                     "### With Versioning\n\n```terraform\nresource \"aws_x\" \"a\" {}\n```\n\n"
                     "```terraform\nresource \"aws_x\" \"b\" {}\n```\n";
    auto elements = ingest::extract_doc_elements(ingest::parse_doc_page(md));
    REQUIRE(elements.examples.size() == 2);
    CHECK(elements.examples[0].title == "With Versioning");
    CHECK(elements.examples[1].title == "Example 2");

    // two untitled blocks: "Basic Usage" then "Example 2"
    std::string untitled = "# Resource: aws_y\nDoc.\n\n## Example Usage\n\n"
                           "```terraform\na\n```\n\n```terraform\nb\n```\n";
    auto fallback = ingest::extract_doc_elements(ingest::parse_doc_page(untitled));
    REQUIRE(fallback.examples.size() == 2);
    CHECK(fallback.examples[0].title == "Basic Usage");
    CHECK(fallback.examples[1].title == "Example 2");
    CHECK(fallback.examples[0].code == "a\n");
}

TEST_CASE("clean_description is idempotent and preserves backtick spans") {
    std::string raw = "  (Required)  Name of\n  the `bucket  value`  thing. ";
    std::string once = ingest::clean_description(raw);
    CHECK(once == "(Required) Name of the `bucket  value` thing.");
    CHECK(ingest::clean_description(once) == once);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> chars(0, 6);
    const char* alphabet = " a`\nb\t c";
    for (int trial = 0; trial < 200; ++trial) {
        std::string s;
        int len = chars(rng) * 7;
        for (int i = 0; i < len; ++i) s.push_back(alphabet[chars(rng)]);
        std::string cleaned = ingest::clean_description(s);
        CHECK(ingest::clean_description(cleaned) == cleaned);
    }
}

TEST_CASE("normalize_section_name applies the documented operation order") {
    CHECK(ingest::normalize_section_name("Ingress Block:") == "ingress");
    CHECK(ingest::normalize_section_name("ingress block:") == "ingress");
    CHECK(ingest::normalize_section_name("Secondary Artifacts Block") == "secondary_artifacts");
    CHECK(ingest::normalize_section_name("Blk 003 2 Block") == "blk_003_2");
    // "block" is stripped as a token, not as a substring
    CHECK(ingest::normalize_section_name("blocked setting") == "blocked_setting");
}

TEST_CASE("match_and_enrich: block-context matching via section normalization") {
    auto dump = ingest::parse_schema_dump(R"json({
      "resource_name": "aws_security_group",
      "arguments": [{"name": "name", "type": "string", "required": true}],
      "blocks": [{"name": "ingress", "min": 0, "max": "unbounded", "arguments": [
        {"name": "from_port", "type": "number", "required": true}]}]
    })json");
    ingest::DocElements elements;
    elements.arg_descriptions.push_back({"Ingress Block:", "from_port", "(Required) Start port."});
    elements.arg_descriptions.push_back({"top-level", "name", "(Required) Group name."});

    auto result = ingest::match_and_enrich(dump, elements);
    CHECK(result.schema.arguments[0].description == "(Required) Group name.");
    CHECK(result.schema.blocks[0].nested_arguments[0].description == "(Required) Start port.");
    CHECK(result.schema.blocks[0].nested_arguments[0].id == "ingress.from_port");
    CHECK(result.orphans.empty());
}

TEST_CASE("match_and_enrich: fallback exhaustion records an orphan, schema unchanged") {
    auto dump = ingest::parse_schema_dump(
        R"json({"resource_name": "aws_x", "arguments": [{"name": "real", "type": "string", "required": false}]})json");
    ingest::DocElements elements;
    elements.arg_descriptions.push_back({"Phantom Block", "ghost", "Never matches."});
    auto result = ingest::match_and_enrich(dump, elements);
    CHECK(result.schema.arguments[0].description.empty());
    REQUIRE(result.orphans.size() == 1);
    CHECK(result.orphans[0].name == "ghost");
}

TEST_CASE("match_and_enrich: first entry wins, the duplicate becomes an orphan") {
    auto dump = ingest::parse_schema_dump(
        R"json({"resource_name": "aws_x", "arguments": [{"name": "a", "type": "string", "required": false}]})json");
    ingest::DocElements elements;
    elements.arg_descriptions.push_back({"top-level", "a", "First."});
    elements.arg_descriptions.push_back({"top-level", "a", "Second."});
    auto result = ingest::match_and_enrich(dump, elements);
    CHECK(result.schema.arguments[0].description == "First.");
    REQUIRE(result.orphans.size() == 1);
    CHECK(result.orphans[0].reason == "already described");
}

TEST_CASE("match_and_enrich: hierarchical and path-based fallbacks") {
    auto dump = ingest::parse_schema_dump(R"json({
      "resource_name": "aws_x",
      "arguments": [{"name": "top_arg", "type": "string", "required": false}],
      "blocks": [{"name": "outer", "min": 1, "max": 1, "arguments": [],
        "blocks": [{"name": "inner", "min": 0, "max": 1, "arguments": [
          {"name": "deep_arg", "type": "string", "required": true}]}]}]
    })json");
    ingest::DocElements elements;
    // context matches "outer", the argument lives in its nested block
    elements.arg_descriptions.push_back({"Outer Block", "deep_arg", "Found via descent."});
    // combined path context "outer inner"
    elements.arg_descriptions.push_back({"Outer Inner Block", "deep_arg", "Ignored, already set."});
    // section matches nothing; falls back to top level
    elements.arg_descriptions.push_back({"Unknown Section", "top_arg", "Found at top level."});
    auto result = ingest::match_and_enrich(dump, elements);
    CHECK(result.schema.blocks[0].nested_blocks[0].nested_arguments[0].description ==
          "Found via descent.");
    CHECK(result.schema.arguments[0].description == "Found at top level.");
    CHECK(result.orphans.size() == 1);
}

TEST_CASE("match_and_enrich records requirement-marker disagreements as warnings") {
    auto dump = ingest::parse_schema_dump(
        R"json({"resource_name": "aws_x", "arguments": [{"name": "a", "type": "string", "required": true}]})json");
    ingest::DocElements elements;
    elements.arg_descriptions.push_back({"top-level", "a", "(Optional) Contradicts the schema."});
    auto result = ingest::match_and_enrich(dump, elements);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("disagrees") != std::string::npos);
    // the schema flag is never overridden by documentation
    CHECK(result.schema.arguments[0].required);
}

TEST_CASE("enrichment preserves schema skeletons on randomized schema/doc pairs") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        auto dump = random_dump(rng);
        auto skeleton = ingest::schema_skeleton(dump);

        // random doc entries: half aimed at real fields, half at garbage
        ingest::DocElements elements;
        for (const auto& arg : dump.arguments) {
            if (coin(rng)) elements.arg_descriptions.push_back({"top-level", arg.name, "Doc."});
        }
        for (const auto& block : dump.blocks) {
            for (const auto& arg : block.arguments) {
                if (coin(rng)) elements.arg_descriptions.push_back({block.name, arg.name, "Doc."});
            }
        }
        elements.arg_descriptions.push_back({"nowhere", "nothing", "Orphan."});

        auto result = ingest::match_and_enrich(dump, elements);
        REQUIRE(result.schema.arguments.size() == skeleton.arguments.size());
        for (std::size_t i = 0; i < skeleton.arguments.size(); ++i) {
            CHECK(result.schema.arguments[i].name == skeleton.arguments[i].name);
            CHECK(result.schema.arguments[i].required == skeleton.arguments[i].required);
            CHECK(result.schema.arguments[i].id == skeleton.arguments[i].id);
        }
        REQUIRE(result.schema.blocks.size() == skeleton.blocks.size());
        for (std::size_t i = 0; i < skeleton.blocks.size(); ++i) {
            check_same_skeleton(result.schema.blocks[i], skeleton.blocks[i]);
        }

        // determinism: the same inputs enrich identically
        auto again = ingest::match_and_enrich(dump, elements);
        CHECK(ingest::enriched_schemas_to_json({result.schema}) ==
              ingest::enriched_schemas_to_json({again.schema}));
    }
}

TEST_CASE("coverage monotonicity: a new matching entry never decreases matched counts") {
    auto dump = ingest::parse_schema_dump(R"json({
      "resource_name": "aws_x",
      "arguments": [
        {"name": "a", "type": "string", "required": false},
        {"name": "b", "type": "string", "required": false}]
    })json");
    ingest::DocElements elements;
    elements.arg_descriptions.push_back({"top-level", "a", "Doc."});
    auto before = ingest::compute_coverage({ingest::match_and_enrich(dump, elements).schema});
    elements.arg_descriptions.push_back({"top-level", "b", "Doc."});
    auto after = ingest::compute_coverage({ingest::match_and_enrich(dump, elements).schema});
    CHECK(after.top_level_args.matched >= before.top_level_args.matched);
    CHECK(after.overall.matched >= before.overall.matched);
    CHECK(before.top_level_args.matched == 1);
    CHECK(before.top_level_args.total == 2);
}

TEST_CASE("compute_coverage: degenerate attribute denominator reports not-applicable") {
    auto dump = ingest::parse_schema_dump(
        R"json({"resource_name": "aws_x", "arguments": [{"name": "a", "type": "string", "required": false}]})json");
    auto report = ingest::compute_coverage({ingest::schema_skeleton(dump)});
    CHECK_FALSE(report.attributes.applicable());
    CHECK(ingest::render_coverage_markdown(report).find("n/a") != std::string::npos);

    auto empty = ingest::compute_coverage({});
    CHECK(empty.overall.total == 0);
    CHECK(empty.overall.matched == 0);
}

TEST_CASE("full reference corpus reproduces the published coverage figures") {
    auto schemas = reference_corpus_enriched();
    REQUIRE(schemas.size() == ReferenceCorpusTotals::resources);
    auto report = ingest::compute_coverage(schemas);

    CHECK(report.top_level_args.matched == ReferenceCorpusTotals::top_args_described);
    CHECK(report.top_level_args.total == ReferenceCorpusTotals::top_args);
    CHECK(report.block_level_args.matched == ReferenceCorpusTotals::block_args_described);
    CHECK(report.block_level_args.total == ReferenceCorpusTotals::block_args);
    CHECK(report.attributes.matched == ReferenceCorpusTotals::attributes_described);
    CHECK(report.attributes.total == ReferenceCorpusTotals::attributes);
    CHECK(report.overall.matched == 3406);
    CHECK(report.overall.total == 4394);

    CHECK(report.top_level_args.percent() == doctest::Approx(81.7).epsilon(0.001));
    CHECK(report.block_level_args.percent() == doctest::Approx(74.4).epsilon(0.001));
    CHECK(report.attributes.percent() == doctest::Approx(95.4).epsilon(0.001));
    CHECK(report.overall.percent() == doctest::Approx(77.5).epsilon(0.001));

    // overall aggregates exactly the argument-field classes
    CHECK(report.overall.matched ==
          report.top_level_args.matched + report.block_level_args.matched);
}

TEST_CASE("enriched schema JSON io round-trips") {
    auto schemas = secondary_artifacts_schemas();
    auto json = ingest::enriched_schemas_to_json(schemas);
    auto loaded = ingest::enriched_schemas_from_json(json);
    CHECK(ingest::enriched_schemas_to_json(loaded) == json);
}

TEST_CASE("ingest_corpus pairs schema and doc files by resource name") {
    TempDir dir("ingest-corpus");
    for (int i = 0; i < 3; ++i) {
        fs::write_file(dir.path() / "schemas" / (corpus_resource_name(i) + ".json"),
                       corpus_schema_json(i));
        fs::write_file(dir.path() / "docs" / (corpus_resource_name(i) + ".md"),
                       corpus_doc_markdown(i));
    }
    auto [schemas, stats] = ingest::ingest_corpus(dir.path() / "schemas", dir.path() / "docs");
    CHECK(schemas.size() == 3);
    CHECK(stats.resources == 3);
    CHECK(stats.pages_skipped == 0);
    CHECK(schemas[0].resource_name == corpus_resource_name(0));
    CHECK_FALSE(schemas[0].arguments[0].description.empty());
    REQUIRE(schemas[0].examples.size() == 1);
    CHECK(schemas[0].examples[0].title == "Basic Usage");
}
