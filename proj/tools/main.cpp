#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iacbench/analyze/changelog.hpp"
#include "iacbench/analyze/corpus.hpp"
#include "iacbench/analyze/report.hpp"
#include "iacbench/analyze/taxonomy.hpp"
#include "iacbench/analyze/tvlog.hpp"
#include "iacbench/common/csv.hpp"
#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/harness/config.hpp"
#include "iacbench/harness/experiment.hpp"
#include "iacbench/harness/outcome.hpp"
#include "iacbench/index/chunk_index.hpp"
#include "iacbench/index/chunker.hpp"
#include "iacbench/index/node_index.hpp"
#include "iacbench/index/summaries.hpp"
#include "iacbench/ingest/coverage.hpp"
#include "iacbench/ingest/io.hpp"
#include "iacbench/kg/build.hpp"
#include "iacbench/kg/io.hpp"
#include "iacbench/kg/references.hpp"
#include "iacbench/retrieval/references.hpp"
#include "iacbench/retrieval/strategy.hpp"
#include "iacbench/stats/cd_diagram.hpp"
#include "iacbench/stats/correction.hpp"
#include "iacbench/stats/report.hpp"

namespace {

using namespace iacbench;

std::vector<kg::ReferenceCandidate> load_reference_csv(const std::filesystem::path& path) {
    std::vector<kg::ReferenceCandidate> refs;
    auto rows = csv::parse(fs::read_file(path));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() == 1 && row[0].empty()) continue;
        if (i == 0 && !row.empty() && row[0] == "source_resource") continue; // header
        if (row.size() != 4) {
            throw ParseError("references file: row " + std::to_string(i + 1) + " needs 4 columns");
        }
        refs.push_back({row[0], row[1], row[2], row[3]});
    }
    return refs;
}

std::string reference_csv(const std::vector<kg::ReferenceCandidate>& refs) {
    std::string out = "source_resource,source_argument,target_resource,target_element\n";
    for (const auto& ref : refs) {
        out += csv::join_row({ref.source_resource, ref.source_argument, ref.target_resource,
                              ref.target_element});
    }
    return out;
}

int cmd_ingest(const std::string& schemas_dir, const std::string& docs_dir,
               const std::string& out_file) {
    auto [schemas, stats] = ingest::ingest_corpus(schemas_dir, docs_dir);
    ingest::save_enriched_schemas(out_file, schemas);

    auto report = ingest::compute_coverage(schemas);
    std::filesystem::path out_path(out_file);
    fs::write_file(out_path.string() + ".coverage.md", ingest::render_coverage_markdown(report));
    fs::write_file(out_path.string() + ".coverage.json", ingest::coverage_to_json(report));

    std::cout << "ingested " << stats.resources << " resources (" << stats.pages_skipped
              << " pages skipped, " << stats.orphan_count << " orphaned doc entries)\n";
    for (const auto& warning : stats.warnings) std::cerr << "warning: " << warning << "\n";
    std::cout << ingest::render_coverage_markdown(report);
    return 0;
}

int cmd_build_graph(const std::string& schemas_file, const std::string& refs_file,
                    const std::string& out_file) {
    auto schemas = ingest::load_enriched_schemas(schemas_file);
    auto graph = kg::build_graph(schemas);
    if (!refs_file.empty()) {
        auto [with_refs, report] = kg::add_reference_edges(graph, load_reference_csv(refs_file));
        graph = std::move(with_refs);
        std::cout << "reference edges: " << report.inserted << " inserted, " << report.duplicates
                  << " duplicates, " << report.missing.size() << " skipped\n";
        for (const auto& miss : report.missing) std::cerr << "warning: " << miss << "\n";
    }
    kg::save_graph(out_file, graph);
    std::cout << "graph: " << graph.node_count() << " nodes, " << graph.edge_count() << " edges\n";
    return 0;
}

int cmd_graph_stats(const std::string& graph_file) {
    auto graph = kg::load_graph(graph_file);
    std::cout << "nodes: " << graph.node_count() << "\n";
    for (const auto& [kind, count] : graph.node_counts_by_kind()) {
        std::cout << "  " << kg::to_string(kind) << ": " << count << "\n";
    }
    std::cout << "edges: " << graph.edge_count() << "\n";
    for (const auto& [kind, count] : graph.edge_counts_by_kind()) {
        std::cout << "  " << kg::to_string(kind) << ": " << count << "\n";
    }
    return 0;
}

int cmd_index_build_chunks(const std::string& docs_dir, const std::string& provider_config,
                           const std::string& out_file) {
    auto provider = providers::make_embedding_provider(provider_config);
    std::vector<index::DocChunk> chunks;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(docs_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".md") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        std::string resource = file.stem().string();
        auto doc_chunks = index::chunk_document(fs::read_file(file), resource);
        chunks.insert(chunks.end(), doc_chunks.begin(), doc_chunks.end());
    }
    auto built = index::build_chunk_index(chunks, provider);
    index::save_chunk_index(out_file, built);
    std::cout << "chunk index: " << built.size() << " chunks from " << files.size()
              << " documents (dimension " << built.dimension() << ")\n";
    return 0;
}

int cmd_index_build_nodes(const std::string& graph_file, const std::string& source,
                          const std::string& summaries_file, const std::string& provider_config,
                          const std::string& out_file) {
    auto provider = providers::make_embedding_provider(provider_config);
    auto graph = kg::load_graph(graph_file);
    index::NodeTextSource text_source = source == "summary" ? index::NodeTextSource::LlmSummary
                                                            : index::NodeTextSource::RawDescription;
    std::map<std::string, std::string> summaries;
    if (text_source == index::NodeTextSource::LlmSummary) {
        if (summaries_file.empty()) {
            throw ConfigError("--source summary requires --summaries <file>");
        }
        summaries = index::load_summaries(summaries_file);
    }
    auto built = index::build_node_index(graph, provider, text_source,
                                         text_source == index::NodeTextSource::LlmSummary ? &summaries
                                                                                          : nullptr);
    index::save_node_index(out_file, built);
    std::cout << "node index: " << built.size() << " entries (" << source << " text)\n";
    return 0;
}

int cmd_index_query(const std::string& index_file, const std::string& provider_config, int k,
                    const std::string& query) {
    auto provider = providers::make_embedding_provider(provider_config);
    auto index = index::load_chunk_index(index_file, provider);
    auto hits = index::query_chunks(index, query, static_cast<std::size_t>(k));
    for (const auto& hit : hits) {
        char sim[32];
        std::snprintf(sim, sizeof(sim), "%.4f", hit.similarity);
        std::cout << sim << "  " << hit.chunk->chunk_id << "  [" << hit.chunk->resource_name << "]\n";
    }
    return 0;
}

int cmd_summarize_nodes(const std::string& graph_file, const std::string& provider_config,
                        const std::string& cache_file, const std::string& out_file) {
    auto graph = kg::load_graph(graph_file);
    auto generator = providers::make_generation_provider(provider_config);
    std::optional<std::filesystem::path> cache;
    if (!cache_file.empty()) cache = cache_file;
    auto result = index::generate_node_summaries(graph, *generator, cache);
    index::save_summaries(out_file, result.by_node);
    std::cout << "summaries: " << result.by_node.size() << " nodes (" << result.generator_calls
              << " generator calls, " << result.cache_hits << " cache hits, "
              << result.failures.size() << " fallbacks)\n";
    return 0;
}

int cmd_extract_refs(const std::string& schemas_file, const std::string& provider_config,
                     const std::string& out_file) {
    auto schemas = ingest::load_enriched_schemas(schemas_file);
    auto generator = providers::make_generation_provider(provider_config);
    auto result = retrieval::extract_reference_candidates(schemas, *generator);
    fs::write_file(out_file, reference_csv(result.candidates));
    std::cout << "reference candidates: " << result.candidates.size() << " kept, "
              << result.filtered.size() << " filtered, " << result.diagnostics.size()
              << " resources skipped\n";
    for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << "\n";
    return 0;
}

int cmd_generate(const std::string& strategy_name, const std::string& query_file,
                 const std::string& graph_file, const std::string& chunk_index_file,
                 const std::string& node_index_file, int ref_depth,
                 const std::string& embedder_config, const std::string& provider_config,
                 const std::string& out_dir) {
    auto strategy = retrieval::strategy_from_string(strategy_name);
    auto embedder = providers::make_embedding_provider(embedder_config);
    auto generator = providers::make_generation_provider(provider_config);

    std::optional<kg::ConfigKnowledgeGraph> graph;
    std::optional<index::ChunkIndex> chunk_index;
    std::optional<index::NodeIndex> node_index;

    retrieval::StrategyStores stores;
    if (!chunk_index_file.empty()) {
        chunk_index = index::load_chunk_index(chunk_index_file, embedder);
        stores.chunk_index = &*chunk_index;
    }
    if (!graph_file.empty()) {
        graph = kg::load_graph(graph_file);
        stores.graph = &*graph;
    }
    if (!node_index_file.empty()) {
        node_index = index::load_node_index(node_index_file, embedder);
        if (node_index->text_source() == index::NodeTextSource::LlmSummary) {
            stores.summary_node_index = &*node_index;
        } else {
            stores.raw_node_index = &*node_index;
        }
    }

    retrieval::StrategyOptions options;
    options.reference_depth = ref_depth;

    auto queries = text::split_lines(fs::read_file(query_file));
    int index_no = 0;
    for (const auto& query : queries) {
        if (text::trim(query).empty()) continue;
        ++index_no;
        char id[16];
        std::snprintf(id, sizeof(id), "q%04d", index_no);
        auto run = retrieval::run_strategy(strategy, query, stores, *generator, options);

        std::filesystem::path base = std::filesystem::path(out_dir) / id;
        fs::write_file(base.string() + ".prompt.txt", run.prompt);
        fs::write_file(base.string() + ".code.tf", run.generated_code);
        nlohmann::json telemetry;
        telemetry["strategy"] = retrieval::to_string(run.context.strategy);
        telemetry["resources"] = run.context.resources;
        telemetry["token_count"] = run.context.token_count;
        nlohmann::json prov = nlohmann::json::array();
        for (const auto& [kind, ident] : run.context.provenance) prov.push_back({kind, ident});
        telemetry["provenance"] = prov;
        fs::write_file(base.string() + ".context.json", telemetry.dump(2) + "\n");
        std::cout << id << ": " << run.context.resources.size() << " resources, "
                  << run.context.token_count << " context tokens\n";
    }
    return 0;
}

int cmd_analyze(const std::string& logs_dir, const std::string& changelog_file,
                const std::string& cutoff_text, const std::string& outcomes_dir,
                const std::string& taxonomy_file, const std::string& out_dir) {
    if (!taxonomy_file.empty()) analyze::load_taxonomy_table(taxonomy_file);
    auto cutoff = text::parse_year_month(cutoff_text);
    if (!cutoff) throw ConfigError("bad --cutoff value (want YYYY-MM): " + cutoff_text);

    analyze::ChangelogIndex changelog;
    if (!changelog_file.empty()) {
        changelog = analyze::build_changelog_index(fs::read_file(changelog_file));
        if (changelog.header_warning()) {
            std::cerr << "warning: changelog has no version headers; attribution will mark "
                         "everything hallucinated\n";
        }
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(logs_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".log") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<analyze::ErrorRecord> records;
    std::map<std::string, stats::PromptOutcome> outcomes;
    for (const auto& file : files) {
        std::string script_id = file.stem().string();
        auto errors = analyze::parse_tv_log(script_id, fs::read_file(file));
        outcomes[script_id] = {errors.empty(), false};
        for (const auto& error : errors) {
            auto record = analyze::classify(error);
            if (analyze::is_unsupported_element(record) && record.error.element) {
                record.attribution = analyze::attribute_element(changelog, *record.error.element, *cutoff);
            }
            records.push_back(std::move(record));
        }
    }

    bool iv_known = false;
    if (!outcomes_dir.empty()) {
        auto stored = harness::load_outcomes(outcomes_dir);
        outcomes.clear();
        for (const auto& [id, outcome] : stored.by_prompt) outcomes[id] = outcome;
        iv_known = true;
    }

    auto stats = analyze::corpus_stats(records, outcomes);
    stats.iv_known = iv_known;
    analyze::emit_reports(stats, records, out_dir);
    std::cout << "analyzed " << files.size() << " logs: " << records.size()
              << " technical errors across " << stats.errors_per_script.size() << " scripts\n";
    std::cout << "reports written to " << out_dir << "/report.md and " << out_dir << "/errors.csv\n";
    return 0;
}

int cmd_run(const std::string& config_file, std::size_t limit) {
    auto config = harness::load_experiment_config(config_file);
    harness::RunOptions options;
    options.limit = limit;
    options.on_progress = [](const std::string& line) { std::cout << line << "\n"; };
    auto report = harness::run_experiment(config, options);
    std::cout << "processed " << report.processed << ", skipped " << report.skipped << " of "
              << report.total_prompts << " prompts\n";
    std::cout << harness::render_summary(report.summary, config.experiment_name);
    return 0;
}

int cmd_summarize(const std::string& experiment_dir) {
    auto outcomes = harness::load_outcomes(experiment_dir);
    std::cout << harness::render_summary(harness::summarize(outcomes), outcomes.label);
    return 0;
}

int cmd_stats_compare(const std::vector<std::string>& experiment_dirs, const std::string& stage_name,
                      double alpha, const std::string& correction_name, bool continuity,
                      const std::string& out_dir) {
    if (experiment_dirs.size() < 2) throw ConfigError("stats compare needs at least two experiments");
    stats::Correction correction = correction_name == "none" ? stats::Correction::None
                                                             : stats::Correction::Bonferroni;

    std::vector<stats::MethodOutcomes> methods;
    for (const auto& dir : experiment_dirs) methods.push_back(harness::load_outcomes(dir));

    std::vector<stats::MethodSummary> summaries;
    for (const auto& method : methods) {
        auto s = harness::summarize(method);
        long long passes = stage_name == "tv" ? s.tv_pass : s.iv_pass;
        summaries.push_back({method.label, passes, s.total});
    }

    std::vector<stats::ComparisonRow> rows;
    std::vector<stats::PairwiseTest> pairwise;
    std::vector<double> p_values;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            stats::ComparisonRow row;
            row.method1 = methods[i].label;
            row.method2 = methods[j].label;
            row.stage = stage_name;
            if (stage_name == "matched-iv") {
                auto matched = stats::matched_iv_compare(methods[i], methods[j], continuity);
                row.table = matched.table;
                row.test = matched.test;
                row.matched_subset = matched.matched_subset_size;
            } else {
                auto stage = stage_name == "tv" ? stats::Stage::Tv : stats::Stage::Overall;
                row.table = stats::paired_table(methods[i], methods[j], stage);
                row.test = stats::mcnemar(row.table, continuity);
            }
            pairwise.push_back({row.method1, row.method2, row.test.p_value});
            p_values.push_back(row.test.p_value);
            rows.push_back(std::move(row));
        }
    }

    auto decisions = stats::bonferroni(p_values, alpha);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].adjusted_significant = correction == stats::Correction::Bonferroni
                                           ? decisions[i].adjusted_significant
                                           : decisions[i].raw_significant;
        rows[i].adjusted_alpha = correction == stats::Correction::Bonferroni
                                     ? decisions[i].adjusted_alpha
                                     : alpha;
    }

    std::filesystem::path out(out_dir);
    fs::write_file(out / "stats.md", stats::render_stats_markdown(rows, summaries, alpha));
    fs::write_file(out / "pairs.csv", stats::render_pairs_csv(rows));

    // CD diagram over the ranking stage (matched-iv ranks by overall rate)
    auto data = stats::cd_diagram(summaries, pairwise, alpha, correction);
    fs::write_file(out / "cd.json", stats::cd_to_json(data));
    fs::write_file(out / "cd.svg", stats::cd_to_svg(data));

    std::cout << "compared " << methods.size() << " methods at stage " << stage_name << "; outputs in "
              << out_dir << "\n";
    for (const auto& bar : data.bars) {
        std::cout << "equivalence cluster:";
        for (const auto& name : bar) std::cout << " " << name;
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configuration-knowledge toolkit for Terraform generation benchmarks"};
    app.require_subcommand(1);

    // ingest
    std::string schemas_dir, docs_dir, out_file;
    auto* ingest_cmd = app.add_subcommand("ingest", "Parse schema dumps and docs into enriched schemas");
    ingest_cmd->add_option("--schemas", schemas_dir, "Directory of schema dump JSON files")->required();
    ingest_cmd->add_option("--docs", docs_dir, "Directory of documentation Markdown files")->required();
    ingest_cmd->add_option("--out", out_file, "Output enriched-schema JSON file")->required();

    // build-graph
    std::string bg_schemas, bg_refs, bg_out;
    auto* build_graph_cmd = app.add_subcommand("build-graph", "Build the knowledge graph");
    build_graph_cmd->add_option("--schemas", bg_schemas, "Enriched-schema JSON file")->required();
    build_graph_cmd->add_option("--refs", bg_refs, "Optional reference-candidate CSV");
    build_graph_cmd->add_option("--out", bg_out, "Output graph file")->required();

    // graph stats
    std::string gs_file;
    auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
    auto* graph_stats_cmd = graph_cmd->add_subcommand("stats", "Print node/edge counts by kind");
    graph_stats_cmd->add_option("graph-file", gs_file, "Graph file")->required();

    // index
    auto* index_cmd = app.add_subcommand("index", "Vector index utilities");
    std::string ic_docs, ic_provider = "test", ic_out;
    auto* index_chunks_cmd = index_cmd->add_subcommand("build-chunks", "Chunk and embed docs");
    index_chunks_cmd->add_option("--docs", ic_docs, "Documentation directory")->required();
    index_chunks_cmd->add_option("--provider", ic_provider, "Embedding provider (test|test:<dim>|http:<url>@<dim>)");
    index_chunks_cmd->add_option("--out", ic_out, "Output index file")->required();

    std::string in_graph, in_source = "raw", in_summaries, in_provider = "test", in_out;
    auto* index_nodes_cmd = index_cmd->add_subcommand("build-nodes", "Embed optional graph nodes");
    index_nodes_cmd->add_option("--graph", in_graph, "Graph file")->required();
    index_nodes_cmd->add_option("--source", in_source, "Text source: raw|summary")
        ->check(CLI::IsMember({"raw", "summary"}));
    index_nodes_cmd->add_option("--summaries", in_summaries, "Summaries JSON (summary mode)");
    index_nodes_cmd->add_option("--provider", in_provider, "Embedding provider");
    index_nodes_cmd->add_option("--out", in_out, "Output index file")->required();

    std::string iq_index, iq_provider = "test", iq_text;
    int iq_k = 5;
    auto* index_query_cmd = index_cmd->add_subcommand("query", "Query a chunk index");
    index_query_cmd->add_option("--index", iq_index, "Chunk index file")->required();
    index_query_cmd->add_option("--provider", iq_provider, "Embedding provider");
    index_query_cmd->add_option("--k", iq_k, "Results to return");
    index_query_cmd->add_option("text", iq_text, "Query text")->required();

    // summarize-nodes
    std::string sn_graph, sn_provider = "echo", sn_cache, sn_out;
    auto* summarize_nodes_cmd =
        app.add_subcommand("summarize-nodes", "Generate semantic node summaries");
    summarize_nodes_cmd->add_option("--graph", sn_graph, "Graph file")->required();
    summarize_nodes_cmd->add_option("--provider", sn_provider, "Generation provider");
    summarize_nodes_cmd->add_option("--cache", sn_cache, "Summary cache file");
    summarize_nodes_cmd->add_option("--out", sn_out, "Output summaries JSON")->required();

    // extract-refs
    std::string er_schemas, er_provider = "echo", er_out;
    auto* extract_refs_cmd =
        app.add_subcommand("extract-refs", "Extract cross-resource reference candidates");
    extract_refs_cmd->add_option("--schemas", er_schemas, "Enriched-schema JSON file")->required();
    extract_refs_cmd->add_option("--provider", er_provider, "Generation provider");
    extract_refs_cmd->add_option("--out", er_out, "Output candidate CSV")->required();

    // generate
    std::string g_strategy, g_query_file, g_graph, g_chunk_index, g_node_index, g_embedder = "test";
    std::string g_provider = "echo", g_out;
    int g_ref_depth = 2;
    auto* generate_cmd = app.add_subcommand("generate", "Run a knowledge-injection strategy");
    generate_cmd->add_option("--strategy", g_strategy, "NO_RAG|NAIVE_RAG|GR_BASE|GR_OPTMATCH|GR_LLMSUM|GR_REF")
        ->required();
    generate_cmd->add_option("--query-file", g_query_file, "One query per line")->required();
    generate_cmd->add_option("--graph", g_graph, "Graph file");
    generate_cmd->add_option("--chunk-index", g_chunk_index, "Chunk index file");
    generate_cmd->add_option("--node-index", g_node_index, "Node index file (raw or summary)");
    generate_cmd->add_option("--ref-depth", g_ref_depth, "Reference expansion depth");
    generate_cmd->add_option("--embedder", g_embedder, "Embedding provider");
    generate_cmd->add_option("--provider", g_provider, "Generation provider");
    generate_cmd->add_option("--out", g_out, "Output directory")->required();

    // analyze
    std::string a_logs, a_changelog, a_cutoff = "2023-10", a_outcomes, a_taxonomy, a_out;
    auto* analyze_cmd = app.add_subcommand("analyze", "Classify technical-validation logs");
    analyze_cmd->add_option("--logs", a_logs, "Directory of <script_id>.log files")->required();
    analyze_cmd->add_option("--changelog", a_changelog, "Provider changelog Markdown");
    analyze_cmd->add_option("--cutoff", a_cutoff, "Training-cutoff month (YYYY-MM)");
    analyze_cmd->add_option("--outcomes", a_outcomes, "Experiment dir supplying stage outcomes");
    analyze_cmd->add_option("--taxonomy", a_taxonomy, "Override taxonomy mapping CSV");
    analyze_cmd->add_option("--out", a_out, "Output directory")->required();

    // run
    std::string r_config;
    std::size_t r_limit = 0;
    auto* run_cmd = app.add_subcommand("run", "Run an experiment end to end");
    run_cmd->add_option("--config", r_config, "Experiment config file")->required();
    run_cmd->add_option("--limit", r_limit, "Process at most N new prompts, then stop");

    // summarize
    std::string s_experiment;
    auto* summarize_cmd = app.add_subcommand("summarize", "Stage summary of an experiment");
    summarize_cmd->add_option("--experiment", s_experiment, "Experiment directory")->required();

    // stats compare
    auto* stats_cmd = app.add_subcommand("stats", "Statistical comparison");
    std::vector<std::string> sc_experiments;
    std::string sc_stage = "tv", sc_correction = "bonferroni", sc_out = ".";
    double sc_alpha = 0.05;
    bool sc_continuity = false;
    auto* stats_compare_cmd = stats_cmd->add_subcommand("compare", "Pairwise McNemar comparison");
    stats_compare_cmd->add_option("experiments", sc_experiments, "Experiment directories")
        ->expected(-2);
    stats_compare_cmd->add_option("--stage", sc_stage, "tv|overall|matched-iv")
        ->check(CLI::IsMember({"tv", "overall", "matched-iv"}));
    stats_compare_cmd->add_option("--alpha", sc_alpha, "Significance level");
    stats_compare_cmd->add_option("--correction", sc_correction, "bonferroni|none")
        ->check(CLI::IsMember({"bonferroni", "none"}));
    stats_compare_cmd->add_flag("--continuity-correction", sc_continuity,
                                "Use the continuity-corrected statistic");
    stats_compare_cmd->add_option("--out", sc_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest_cmd) return cmd_ingest(schemas_dir, docs_dir, out_file);
        if (*build_graph_cmd) return cmd_build_graph(bg_schemas, bg_refs, bg_out);
        if (*graph_stats_cmd) return cmd_graph_stats(gs_file);
        if (*index_chunks_cmd) return cmd_index_build_chunks(ic_docs, ic_provider, ic_out);
        if (*index_nodes_cmd) {
            return cmd_index_build_nodes(in_graph, in_source, in_summaries, in_provider, in_out);
        }
        if (*index_query_cmd) return cmd_index_query(iq_index, iq_provider, iq_k, iq_text);
        if (*summarize_nodes_cmd) return cmd_summarize_nodes(sn_graph, sn_provider, sn_cache, sn_out);
        if (*extract_refs_cmd) return cmd_extract_refs(er_schemas, er_provider, er_out);
        if (*generate_cmd) {
            return cmd_generate(g_strategy, g_query_file, g_graph, g_chunk_index, g_node_index,
                                g_ref_depth, g_embedder, g_provider, g_out);
        }
        if (*analyze_cmd) {
            return cmd_analyze(a_logs, a_changelog, a_cutoff, a_outcomes, a_taxonomy, a_out);
        }
        if (*run_cmd) return cmd_run(r_config, r_limit);
        if (*summarize_cmd) return cmd_summarize(s_experiment);
        if (*stats_compare_cmd) {
            return cmd_stats_compare(sc_experiments, sc_stage, sc_alpha, sc_correction, sc_continuity,
                                     sc_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
