#include <benchmark/benchmark.h>

#include "iacbench/stats/mcnemar.hpp"

static void BM_McNemar(benchmark::State& state) {
    iacbench::stats::ContingencyTable table{286, 81, 35, 55};
    for (auto _ : state) {
        auto result = iacbench::stats::mcnemar(table);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_McNemar);
