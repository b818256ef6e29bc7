#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "iacbench/index/chunker.hpp"
#include "iacbench/providers/embedding.hpp"

namespace iacbench::index {

struct ChunkIndexEntry {
    DocChunk chunk;
    std::vector<double> vector;
    double norm = 0.0;
};

struct ChunkHit {
    const DocChunk* chunk = nullptr;
    double similarity = 0.0;
};

// Flat in-memory vector store over documentation chunks; search is exhaustive
// cosine similarity. Immutable once built; concurrently queryable.
class ChunkIndex {
public:
    ChunkIndex() = default;
    ChunkIndex(std::vector<ChunkIndexEntry> entries, std::size_t dimension, std::string provider_id,
               std::shared_ptr<providers::EmbeddingProvider> provider);

    std::size_t size() const { return entries_.size(); }
    std::size_t dimension() const { return dimension_; }
    const std::string& provider_id() const { return provider_id_; }
    const std::vector<ChunkIndexEntry>& entries() const { return entries_; }
    const std::shared_ptr<providers::EmbeddingProvider>& provider() const { return provider_; }

    void attach_provider(std::shared_ptr<providers::EmbeddingProvider> provider);

private:
    std::vector<ChunkIndexEntry> entries_;
    std::size_t dimension_ = 0;
    std::string provider_id_;
    std::shared_ptr<providers::EmbeddingProvider> provider_;
};

// Embeds every chunk once (batched); metadata is preserved. Provider failure
// raises IndexError naming the failed batch; a wrong-length reply is a
// contract violation and also raises IndexError.
ChunkIndex build_chunk_index(const std::vector<DocChunk>& chunks,
                             std::shared_ptr<providers::EmbeddingProvider> provider);

// Top-k by descending cosine similarity, ties broken by ascending chunk_id.
// Returns min(k, size) hits; an empty index yields an empty list.
std::vector<ChunkHit> query_chunks(const ChunkIndex& index, const std::string& query_text,
                                   std::size_t k);

double cosine_similarity(const std::vector<double>& a, double norm_a, const std::vector<double>& b,
                         double norm_b);

// Portable text export (one record per line: id, metadata, vector values).
std::string export_chunk_index(const ChunkIndex& index);
ChunkIndex import_chunk_index(std::string_view content,
                              std::shared_ptr<providers::EmbeddingProvider> provider);

void save_chunk_index(const std::filesystem::path& path, const ChunkIndex& index);
ChunkIndex load_chunk_index(const std::filesystem::path& path,
                            std::shared_ptr<providers::EmbeddingProvider> provider);

} // namespace iacbench::index
