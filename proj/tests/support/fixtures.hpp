#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "iacbench/analyze/taxonomy.hpp"
#include "iacbench/ingest/enrich.hpp"
#include "iacbench/kg/references.hpp"
#include "iacbench/stats/pairing.hpp"

namespace iacbench::testsupport {

// ---------------------------------------------------------------------------
// Full-scale reference corpus: 199 resources sized so that ingest coverage and graph
// node/edge counts land on the published reference numbers.
//   top-level arguments 1875 (1531 documented), block arguments 2519 (1875),
//   attributes 527 (503), blocks 1200, examples 199
//   graph: 6519 nodes, 6320 hierarchy edges, + 7444 reference edges = 13764
// ---------------------------------------------------------------------------

struct ReferenceCorpusTotals {
    static constexpr int resources = 199;
    static constexpr int top_args = 1875;
    static constexpr int top_args_described = 1531;
    static constexpr int block_args = 2519;
    static constexpr int block_args_described = 1875;
    static constexpr int attributes = 527;
    static constexpr int attributes_described = 503;
    static constexpr int blocks = 1200;
    static constexpr int examples = 199;
    static constexpr int nodes = 6519;
    static constexpr int hierarchy_edges = 6320;
    static constexpr int reference_edges = 7444;
};

// Schema-dump JSON and documentation Markdown for resource i.
std::string corpus_schema_json(int i);
std::string corpus_doc_markdown(int i);
std::string corpus_resource_name(int i);

// Writes schemas/<name>.json and docs/<name>.md for all 199 resources.
void write_reference_corpus(const std::filesystem::path& dir);

// Runs the real ingest pipeline in memory over the generated corpus.
std::vector<ingest::EnrichedResourceSchema> reference_corpus_enriched();

// 7444 distinct reference candidates, all endpoints present in the corpus.
std::vector<kg::ReferenceCandidate> corpus_reference_candidates();

// ---------------------------------------------------------------------------
// Baseline error-log fixture: 315 failed scripts, 774 atomic errors matching
// the published label distribution (FI=503, SD=12, CRF=54, Inc=205;
// mean 2.46, median 2, max 17), plus a changelog marking exactly 17 argument
// and 2 block elements as deprecated before the 2023-10 cutoff.
// ---------------------------------------------------------------------------

struct BaselineLogTotals {
    static constexpr int failed_scripts = 315;
    static constexpr int passing_scripts = 142; // empty logs
    static constexpr int total_errors = 774;
    static constexpr int deprecated_args = 17;
    static constexpr int hallucinated_args = 309;
    static constexpr int deprecated_blocks = 2;
    static constexpr int hallucinated_blocks = 102;
    static constexpr int hallucinated_resources = 44;
};

// label code -> count, exactly the published per-label distribution.
const std::vector<std::pair<std::string, int>>& baseline_label_counts();

// Writes <script>.log files (failed scripts carry stanzas, passing scripts
// are empty) and returns the script ids in order.
std::vector<std::string> write_baseline_logs(const std::filesystem::path& dir);

std::string baseline_changelog_markdown();

// ---------------------------------------------------------------------------
// Six-method outcome fixture reproducing the published success-rate columns:
//   TV passes  170 / 321 / 367 / 385 / 380 / 367  (of 457)
//   IV passes  124 / 240 / 267 / 285 / 286 / 276
// with the published joint structure where the tables pin it (Graph vs Naive
// TV table a=286 b=81 c=35 d=55) and a pairwise-significance pattern whose
// Bonferroni-corrected CD clustering is {GR-Base, GR-OptMatch, GR-LLMSum,
// GR-Ref} for both the TV and overall stages.
// ---------------------------------------------------------------------------

inline constexpr std::array<const char*, 6> kSixMethodNames = {
    "Base", "NaiveRAG", "GR-Base", "GR-OptMatch", "GR-LLMSum", "GR-Ref"};

std::array<stats::MethodOutcomes, 6> six_method_outcomes();

// Writes one experiment directory per method (experiment.json + outcomes/).
void write_six_method_experiments(const std::filesystem::path& root);

// ---------------------------------------------------------------------------
// Small retrieval fixtures
// ---------------------------------------------------------------------------

// Build-project resource with an optional secondary_artifacts block holding a
// required artifact_identifier, plus a second plain resource.
std::vector<ingest::EnrichedResourceSchema> secondary_artifacts_schemas();

// aws_instance -> aws_subnet -> aws_vpc reference chain.
std::vector<ingest::EnrichedResourceSchema> reference_chain_schemas();
std::vector<kg::ReferenceCandidate> reference_chain_candidates();

// ---------------------------------------------------------------------------
// Harness run fixture: n prompt cases with scripted generator responses that
// force a deterministic outcome pattern (every third prompt fails TV, every
// fifth passing prompt misses the intent marker).
// ---------------------------------------------------------------------------

struct RunFixture {
    std::filesystem::path prompt_set;
    std::filesystem::path responses;
    int tv_pass = 0;
    int iv_pass = 0;
    int total = 0;
};

RunFixture write_run_fixture(const std::filesystem::path& dir, int prompts = 20);

// Prompt set plus scripted responses that drive one six-method column
// (457 prompts) through the full harness: empty reply on TV failures, a
// marker-less script on IV failures, a marked script on successes.
RunFixture write_method_run_fixture(const std::filesystem::path& dir, std::size_t method_index);

} // namespace iacbench::testsupport
