#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "temp_dir.hpp"

#include "iacbench/analyze/changelog.hpp"
#include "iacbench/analyze/corpus.hpp"
#include "iacbench/analyze/intent.hpp"
#include "iacbench/analyze/report.hpp"
#include "iacbench/analyze/taxonomy.hpp"
#include "iacbench/analyze/tvlog.hpp"
#include "iacbench/common/fs.hpp"

using namespace iacbench;
using namespace iacbench::testsupport;

namespace {

// runs the whole analysis pipeline over the baseline fixture
struct PipelineResult {
    std::vector<analyze::ErrorRecord> records;
    analyze::CorpusErrorStats stats;
};

PipelineResult run_baseline_pipeline(const std::filesystem::path& logs_dir) {
    auto script_ids = write_baseline_logs(logs_dir);
    auto changelog = analyze::build_changelog_index(baseline_changelog_markdown());
    auto cutoff = *text::parse_year_month("2023-10");

    PipelineResult result;
    std::map<std::string, stats::PromptOutcome> outcomes;
    for (const auto& id : script_ids) {
        auto errors = analyze::parse_tv_log(id, fs::read_file(logs_dir / (id + ".log")));
        outcomes[id] = {errors.empty(), false};
        for (const auto& error : errors) {
            auto record = analyze::classify(error);
            if (analyze::is_unsupported_element(record) && record.error.element) {
                record.attribution =
                    analyze::attribute_element(changelog, *record.error.element, cutoff);
            }
            result.records.push_back(std::move(record));
        }
    }
    result.stats = analyze::corpus_stats(result.records, outcomes);
    return result;
}

} // namespace

TEST_CASE("parse_tv_log extracts the published sample stanza") {
    std::string log = "Error: Unsupported argument\n"
                      "\n"
                      "  on main.tf line 41, in resource \"aws_route53_record\" \"weighted_record\":\n"
                      "  41:     set_identifier = \"replica-1\"\n"
                      "\n"
                      "An argument named \"set_identifier\" is not expected here.\n";
    auto errors = analyze::parse_tv_log("s1", log);
    REQUIRE(errors.size() == 1);
    REQUIRE(errors[0].element.has_value());
    CHECK(errors[0].element->kind == analyze::ElementKind::Argument);
    CHECK(errors[0].element->name == "set_identifier");
    CHECK(errors[0].element->resource_type == "aws_route53_record");
    REQUIRE(errors[0].location.has_value());
    CHECK(errors[0].location->file == "main.tf");
    CHECK(errors[0].location->line == 41);
    CHECK(errors[0].summary == "Unsupported argument");
}

TEST_CASE("parse_tv_log: empty log and a 17-stanza script") {
    CHECK(analyze::parse_tv_log("s", "").empty());
    CHECK(analyze::parse_tv_log("s", "all good, no errors\n").empty());

    std::string log;
    for (int i = 0; i < 17; ++i) {
        log += "Error: Missing required argument\n\nThe argument \"a" + std::to_string(i) +
               "\" is required, but no definition was found.\n\n";
    }
    CHECK(analyze::parse_tv_log("s", log).size() == 17);
}

TEST_CASE("parse_tv_log: unmatched stanzas become errors without element detail") {
    auto errors = analyze::parse_tv_log("s", "Error: Something novel\n\nNo rule matches this text.\n");
    REQUIRE(errors.size() == 1);
    CHECK_FALSE(errors[0].element.has_value());
    CHECK(errors[0].summary == "Something novel");
}

TEST_CASE("parser is stanza-order independent") {
    std::string a = "Error: Unsupported argument\n\nAn argument named \"x\" is not expected here.\n";
    std::string b = "Error: Missing required argument\n\nThe argument \"y\" is required, but no "
                    "definition was found.\n";
    auto fwd = analyze::parse_tv_log("s", a + "\n" + b);
    auto rev = analyze::parse_tv_log("s", b + "\n" + a);
    REQUIRE(fwd.size() == 2);
    REQUIRE(rev.size() == 2);
    CHECK(analyze::classify(fwd[0]).label.code == analyze::classify(rev[1]).label.code);
    CHECK(analyze::classify(fwd[1]).label.code == analyze::classify(rev[0]).label.code);
}

TEST_CASE("classify assigns the fixed dim-1 and dim-2 labels") {
    auto unsupported = analyze::classify(analyze::parse_tv_log(
        "s", "Error: Unsupported argument\n\nAn argument named \"x\" is not expected here.\n")[0]);
    CHECK(unsupported.label.category == analyze::Dim1Category::Schema);
    CHECK(unsupported.label.subcategory == "Argument error");
    CHECK(unsupported.label.atomic_label == "Uses an argument that is not allowed");
    CHECK(unsupported.label.dim2 == analyze::Dim2Pattern::FactualIncorrectness);

    auto missing = analyze::classify(analyze::parse_tv_log(
        "s", "Error: Missing required argument\n\nThe argument \"x\" is required.\n")[0]);
    CHECK(missing.label.atomic_label == "Leaves out a required argument");
    CHECK(missing.label.dim2 == analyze::Dim2Pattern::Incompleteness);

    auto duplicate = analyze::classify(analyze::parse_tv_log(
        "s", "Error: Duplicate resource \"aws_x\" configuration\n\nA aws_x resource named \"a\" was "
             "already declared.\n")[0]);
    CHECK(duplicate.label.atomic_label == "Declares the same resource more than once");
    CHECK(duplicate.label.dim2 == analyze::Dim2Pattern::ContextualReasoningFailure);

    auto unknown = analyze::classify(analyze::parse_tv_log(
        "s", "Error: Entirely novel condition\n\nNothing matches.\n")[0]);
    CHECK(unknown.label.subcategory == "Unknown");
    CHECK(unknown.label.dim2 == analyze::Dim2Pattern::ContextualReasoningFailure);
    CHECK(unknown.flagged_for_review);
}

TEST_CASE("taxonomy data table matches the built-in mapping") {
    std::string repo_csv = fs::read_file(std::filesystem::path(IACBENCH_REPO_DATA) / "dim2_map.csv");
    CHECK(repo_csv == analyze::taxonomy_table_csv());

    // loading the file is a no-op relative to the built-in table
    analyze::load_taxonomy_table(std::filesystem::path(IACBENCH_REPO_DATA) / "dim2_map.csv");
    CHECK(analyze::taxonomy_table_csv() == repo_csv);
}

TEST_CASE("build_changelog_index: date context, entries, ordering") {
    std::string md = "## 5.0.0 (May 2023)\n\n"
                     "* resource/aws_foo: remove deprecated `bar` argument\n"
                     "* improve docs with no element mention\n\n"
                     "## 5.5.0 (August 2023)\n\n"
                     "* resource/aws_foo: `bar` replaced by `baz`\n";
    auto index = analyze::build_changelog_index(md);
    CHECK(index.size() == 3);
    CHECK_FALSE(index.header_warning());

    auto hits = index.matching("aws_foo", "bar");
    REQUIRE(hits.size() == 2);
    CHECK(hits[0]->date < hits[1]->date); // date-ordered
    CHECK(hits[0]->version == "5.0.0");

    CHECK(index.matching("aws_foo", "nothing").empty());

    auto headerless = analyze::build_changelog_index("* resource/aws_foo: stray entry\n");
    CHECK(headerless.empty());
    CHECK(headerless.header_warning());
}

TEST_CASE("attribute_element applies the deprecation rule at the cutoff") {
    auto index = analyze::build_changelog_index(baseline_changelog_markdown());
    auto cutoff = *text::parse_year_month("2023-10");

    analyze::ErrorElement deprecated{analyze::ElementKind::Argument, "legacy_arg_0",
                                     "aws_legacy_res_0"};
    CHECK(analyze::attribute_element(index, deprecated, cutoff) == analyze::Attribution::Deprecated);

    analyze::ErrorElement absent{analyze::ElementKind::Argument, "ghost_arg_5", "aws_app_res_5"};
    CHECK(analyze::attribute_element(index, absent, cutoff) == analyze::Attribution::NeverDocumented);

    // whole-token matching: "legacy_arg_1" must not match "legacy_arg_10"
    analyze::ErrorElement prefix{analyze::ElementKind::Argument, "legacy_arg_", "aws_legacy_res_0"};
    CHECK(analyze::attribute_element(index, prefix, cutoff) == analyze::Attribution::NeverDocumented);

    // monotone in the cutoff: the post-cutoff entry flips only when the
    // cutoff moves past it, never the other way
    analyze::ErrorElement late{analyze::ElementKind::Argument, "ghost_arg_20", "aws_app_res_20"};
    CHECK(analyze::attribute_element(index, late, cutoff) == analyze::Attribution::NeverDocumented);
    CHECK(analyze::attribute_element(index, late, *text::parse_year_month("2025-01")) ==
          analyze::Attribution::Deprecated);
    CHECK(analyze::attribute_element(index, deprecated, *text::parse_year_month("2025-01")) ==
          analyze::Attribution::Deprecated);
}

TEST_CASE("baseline fixture reproduces the published taxonomy totals") {
    TempDir dir("analyze-baseline");
    auto result = run_baseline_pipeline(dir.path());

    CHECK(result.records.size() == BaselineLogTotals::total_errors);

    // every record classified, none unknown
    for (const auto& record : result.records) {
        CHECK_FALSE(record.flagged_for_review);
    }

    // dim-2 totals recomputed from the label mapping
    using P = analyze::Dim2Pattern;
    std::map<P, long long> totals;
    for (const auto& record : result.records) ++totals[record.label.dim2];
    CHECK(totals[P::FactualIncorrectness] == 503);
    CHECK(totals[P::StructuralDeficit] == 12);
    CHECK(totals[P::ContextualReasoningFailure] == 54);
    CHECK(totals[P::Incompleteness] == 205);
    // and they reconcile with the aggregated stats
    CHECK(result.stats.dim2_totals[0] == 503);
    CHECK(result.stats.dim2_totals[1] == 12);
    CHECK(result.stats.dim2_totals[2] == 54);
    CHECK(result.stats.dim2_totals[3] == 205);

    // dim-1 highlights
    long long argument_errors = 0;
    long long schema_errors = 0;
    for (const auto& row : result.stats.cross) {
        if (row.subcategory == "Argument error") argument_errors = row.row_total();
        if (row.category == analyze::Dim1Category::Schema) schema_errors += row.row_total();
    }
    double argument_share = result.stats.cell_percent(argument_errors);
    double schema_share = result.stats.cell_percent(schema_errors);
    CHECK(argument_share == doctest::Approx(63.1).epsilon(0.0016)); // 63.1 +/- 0.1
    CHECK(schema_share == doctest::Approx(94.5).epsilon(0.0011));   // 94.5 +/- 0.1

    // per-script distribution
    CHECK(result.stats.errors_per_script.size() == BaselineLogTotals::failed_scripts);
    CHECK(result.stats.mean_errors == doctest::Approx(2.46).epsilon(0.002));
    CHECK(result.stats.median_errors == doctest::Approx(2.0));
    CHECK(result.stats.max_errors == 17);
}

TEST_CASE("baseline fixture reproduces the published attribution split") {
    TempDir dir("analyze-attrib");
    auto result = run_baseline_pipeline(dir.path());

    std::map<std::string, std::map<analyze::Attribution, int>> split;
    for (const auto& record : result.records) {
        if (!record.attribution) continue;
        split[record.label.code][*record.attribution]++;
    }
    CHECK(split["arg_unsupported"][analyze::Attribution::NeverDocumented] == 309);
    CHECK(split["arg_unsupported"][analyze::Attribution::Deprecated] == 17);
    CHECK(split["block_unsupported"][analyze::Attribution::NeverDocumented] == 102);
    CHECK(split["block_unsupported"][analyze::Attribution::Deprecated] == 2);
    CHECK(split["res_unknown_type"][analyze::Attribution::NeverDocumented] == 44);
    CHECK(split["res_unknown_type"][analyze::Attribution::Deprecated] == 0);

    // attribution exists exactly on unsupported-element records
    for (const auto& record : result.records) {
        CHECK(record.attribution.has_value() == analyze::is_unsupported_element(record));
    }
}

TEST_CASE("corpus_stats: single script, and intent records excluded from technical counts") {
    auto errors = analyze::parse_tv_log(
        "only", "Error: Missing required argument\n\nThe argument \"a\" is required.\n"
                "Error: Unsupported argument\n\nAn argument named \"b\" is not expected here.\n");
    std::vector<analyze::ErrorRecord> records;
    for (const auto& error : errors) records.push_back(analyze::classify(error));

    // one intent record that must stay out of the technical statistics
    auto intent = analyze::classify_intent_failure(
        "only", "resource \"aws_a\" \"x\" {}", "policy failed: missing resource \"aws_b\"", nullptr,
        *text::parse_year_month("2023-10"));
    records.push_back(intent);

    std::map<std::string, stats::PromptOutcome> outcomes{{"only", {false, false}}};
    auto stats = analyze::corpus_stats(records, outcomes);
    CHECK(stats.total_errors == 2);
    CHECK(stats.mean_errors == doctest::Approx(2.0));
    CHECK(stats.median_errors == doctest::Approx(2.0));
    CHECK(stats.max_errors == 2);
}

TEST_CASE("classify_intent_failure rule ladder") {
    auto cutoff = *text::parse_year_month("2023-10");
    auto changelog = analyze::build_changelog_index(
        "## 5.0.0 (May 2023)\n\n* resource/aws_old_thing: deprecated in favor of aws_new_thing\n");

    auto missing = analyze::classify_intent_failure(
        "s", "resource \"aws_a\" \"x\" {}", "deny: missing resource \"aws_queue\"", &changelog, cutoff);
    CHECK(missing.label.code == "intent_missing_resource");

    auto wrong = analyze::classify_intent_failure(
        "s", "resource \"aws_msk_cluster\" \"x\" {}",
        "deny: expected resource \"aws_msk_serverless_cluster\"", &changelog, cutoff);
    CHECK(wrong.label.code == "intent_wrong_resource");

    auto deprecated = analyze::classify_intent_failure(
        "s", "resource \"aws_old_thing\" \"x\" {}", "deny: policy violated", &changelog, cutoff);
    CHECK(deprecated.label.code == "intent_deprecated_resource");

    auto misconfig = analyze::classify_intent_failure(
        "s", "resource \"aws_env\" \"x\" { tier = \"Worker\" }", "deny: tier mismatch", &changelog,
        cutoff);
    CHECK(misconfig.label.code == "intent_misconfiguration");
    CHECK(misconfig.manual_override.empty());
}

TEST_CASE("emit_reports: empty corpus, row counts, determinism") {
    TempDir dir("reports");
    std::map<std::string, stats::PromptOutcome> no_outcomes;
    auto empty_stats = analyze::corpus_stats({}, no_outcomes);
    analyze::emit_reports(empty_stats, {}, dir.path() / "empty");
    std::string empty_csv = fs::read_file(dir.path() / "empty" / "errors.csv");
    CHECK(empty_csv ==
          "script_id,category,subcategory,atomic_label,dim2,attribution,file,line,message,"
          "manual_override\n");
    CHECK(fs::read_file(dir.path() / "empty" / "report.md").find("Total technical errors: 0") !=
          std::string::npos);

    auto result = run_baseline_pipeline(dir.path() / "logs");
    analyze::emit_reports(result.stats, result.records, dir.path() / "full");
    std::string csv = fs::read_file(dir.path() / "full" / "errors.csv");
    std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == result.records.size() + 1); // header + one row per record

    // byte-identical on identical input
    analyze::emit_reports(result.stats, result.records, dir.path() / "again");
    CHECK(fs::read_file(dir.path() / "again" / "errors.csv") == csv);
    CHECK(fs::read_file(dir.path() / "again" / "report.md") ==
          fs::read_file(dir.path() / "full" / "report.md"));
}

TEST_CASE("cross-distribution percentages sum to 100 within rounding slack") {
    TempDir dir("cross");
    auto result = run_baseline_pipeline(dir.path());
    double total = 0.0;
    for (const auto& row : result.stats.cross) {
        for (long long count : row.counts) total += result.stats.cell_percent(count);
    }
    CHECK(total == doctest::Approx(100.0).epsilon(0.002));
}
