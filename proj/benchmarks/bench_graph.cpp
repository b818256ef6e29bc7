#include <benchmark/benchmark.h>

#include "iacbench/ingest/enrich.hpp"
#include "iacbench/ingest/schema.hpp"
#include "iacbench/kg/build.hpp"
#include "iacbench/kg/subgraph.hpp"

namespace {

std::vector<iacbench::ingest::EnrichedResourceSchema> synthetic_schemas(int resources) {
    std::vector<iacbench::ingest::EnrichedResourceSchema> schemas;
    for (int i = 0; i < resources; ++i) {
        iacbench::ingest::RawSchemaDump dump;
        dump.resource_name = "aws_bench_" + std::to_string(i);
        for (int a = 0; a < 10; ++a) {
            dump.arguments.push_back({"arg" + std::to_string(a), "string", a == 0});
        }
        for (int b = 0; b < 6; ++b) {
            iacbench::ingest::RawBlock block;
            block.name = "blk" + std::to_string(b);
            block.cardinality.min = b == 0 ? 1 : 0;
            block.arguments.push_back({"nested0", "string", true});
            block.arguments.push_back({"nested1", "string", false});
            dump.blocks.push_back(block);
        }
        for (int t = 0; t < 3; ++t) dump.attributes.push_back({"attr" + std::to_string(t), "string"});
        schemas.push_back(iacbench::ingest::schema_skeleton(dump));
    }
    return schemas;
}

} // namespace

static void BM_BuildGraph(benchmark::State& state) {
    auto schemas = synthetic_schemas(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto graph = iacbench::kg::build_graph(schemas);
        benchmark::DoNotOptimize(graph);
    }
}
BENCHMARK(BM_BuildGraph)->Arg(199);

static void BM_BaseSubgraph(benchmark::State& state) {
    auto graph = iacbench::kg::build_graph(synthetic_schemas(199));
    for (auto _ : state) {
        auto sub = iacbench::kg::base_subgraph(graph, "aws_bench_42");
        benchmark::DoNotOptimize(sub);
    }
}
BENCHMARK(BM_BaseSubgraph);
