#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "iacbench/index/chunker.hpp"

namespace {

std::string synthetic_doc(std::size_t size) {
    std::mt19937 rng(42);
    std::string out;
    std::uniform_int_distribution<int> kind(0, 15);
    while (out.size() < size) {
        switch (kind(rng)) {
        case 0: out += "\n## Section"; break;
        case 1: out += "\n\n"; break;
        case 2: out += ". "; break;
        default:
            for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>('a' + kind(rng)));
            out.push_back(' ');
        }
    }
    return out;
}

} // namespace

static void BM_ChunkDocument(benchmark::State& state) {
    std::string doc = synthetic_doc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto chunks = iacbench::index::chunk_document(doc, "bench");
        benchmark::DoNotOptimize(chunks);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(doc.size()));
}
BENCHMARK(BM_ChunkDocument)->Arg(10000)->Arg(100000);
