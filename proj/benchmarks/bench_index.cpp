#include <benchmark/benchmark.h>

#include <random>

#include "iacbench/index/chunk_index.hpp"
#include "iacbench/providers/embedding.hpp"

namespace {

iacbench::index::ChunkIndex make_index(int entries, std::size_t dim) {
    std::mt19937 rng(7);
    const char* words[] = {"bucket", "network", "queue", "policy", "cluster", "subnet"};
    std::vector<iacbench::index::DocChunk> chunks;
    for (int i = 0; i < entries; ++i) {
        iacbench::index::DocChunk chunk;
        chunk.chunk_id = "c" + std::to_string(i);
        chunk.resource_name = "r" + std::to_string(i % 50);
        for (int w = 0; w < 6; ++w) chunk.text += std::string(words[rng() % 6]) + " ";
        chunk.ordinal = i;
        chunks.push_back(std::move(chunk));
    }
    auto provider = std::make_shared<iacbench::providers::HashedBowEmbedder>(dim);
    return iacbench::index::build_chunk_index(chunks, provider);
}

} // namespace

static void BM_QueryChunks(benchmark::State& state) {
    auto index = make_index(static_cast<int>(state.range(0)), 768);
    for (auto _ : state) {
        auto hits = iacbench::index::query_chunks(index, "bucket policy network", 5);
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_QueryChunks)->Arg(1000)->Arg(5000);

static void BM_BuildChunkIndex(benchmark::State& state) {
    std::vector<iacbench::index::DocChunk> chunks;
    for (int i = 0; i < state.range(0); ++i) {
        iacbench::index::DocChunk chunk;
        chunk.chunk_id = "c" + std::to_string(i);
        chunk.text = "bucket network policy text number " + std::to_string(i);
        chunk.ordinal = i;
        chunks.push_back(std::move(chunk));
    }
    auto provider = std::make_shared<iacbench::providers::HashedBowEmbedder>(768);
    for (auto _ : state) {
        auto index = iacbench::index::build_chunk_index(chunks, provider);
        benchmark::DoNotOptimize(index);
    }
}
BENCHMARK(BM_BuildChunkIndex)->Arg(1000);
