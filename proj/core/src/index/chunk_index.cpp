#include "iacbench/index/chunk_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"
#include "iacbench/common/fs.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::index {

namespace {

constexpr std::size_t kEmbedBatch = 64;

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void validate_vector(const std::vector<double>& v, std::size_t dimension, const std::string& what) {
    if (v.size() != dimension) {
        throw IndexError("index: " + what + " has dimension " + std::to_string(v.size()) +
                         ", declared " + std::to_string(dimension));
    }
    for (double x : v) {
        if (!std::isfinite(x)) throw IndexError("index: " + what + " has a non-finite entry");
    }
}

std::string format_vector(const std::vector<double>& v) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(' ');
        std::snprintf(buf, sizeof(buf), "%.9g", v[i]);
        out += buf;
    }
    return out;
}

std::vector<double> parse_vector(const std::string& s) {
    std::vector<double> v;
    for (const auto& part : text::split(s, ' ')) {
        if (part.empty()) continue;
        v.push_back(std::stod(part));
    }
    return v;
}

} // namespace

ChunkIndex::ChunkIndex(std::vector<ChunkIndexEntry> entries, std::size_t dimension,
                       std::string provider_id, std::shared_ptr<providers::EmbeddingProvider> provider)
    : entries_(std::move(entries)), dimension_(dimension), provider_id_(std::move(provider_id)),
      provider_(std::move(provider)) {}

void ChunkIndex::attach_provider(std::shared_ptr<providers::EmbeddingProvider> provider) {
    provider_ = std::move(provider);
}

ChunkIndex build_chunk_index(const std::vector<DocChunk>& chunks,
                             std::shared_ptr<providers::EmbeddingProvider> provider) {
    if (!provider) throw ConfigError("build_chunk_index: no embedding provider");
    const std::size_t dimension = provider->dimension();

    std::vector<ChunkIndexEntry> entries;
    entries.reserve(chunks.size());

    for (std::size_t batch_start = 0; batch_start < chunks.size(); batch_start += kEmbedBatch) {
        std::size_t batch_end = std::min(batch_start + kEmbedBatch, chunks.size());
        std::vector<std::string> texts;
        texts.reserve(batch_end - batch_start);
        for (std::size_t i = batch_start; i < batch_end; ++i) texts.push_back(chunks[i].text);

        std::vector<std::vector<double>> vectors;
        try {
            vectors = provider->embed(texts);
        } catch (const std::exception& e) {
            throw IndexError("build_chunk_index: provider failed on batch [" +
                             std::to_string(batch_start) + ", " + std::to_string(batch_end) + "): " +
                             e.what());
        }
        if (vectors.size() != texts.size()) {
            throw IndexError("build_chunk_index: provider returned " + std::to_string(vectors.size()) +
                             " vectors for a batch of " + std::to_string(texts.size()));
        }
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            validate_vector(vectors[i], dimension, "chunk " + chunks[batch_start + i].chunk_id);
            ChunkIndexEntry entry;
            entry.chunk = chunks[batch_start + i];
            entry.norm = l2_norm(vectors[i]);
            entry.vector = std::move(vectors[i]);
            if (entry.norm <= 0.0) {
                throw IndexError("build_chunk_index: zero vector for chunk " + entry.chunk.chunk_id);
            }
            entries.push_back(std::move(entry));
        }
    }
    std::string provider_id = provider->id();
    return ChunkIndex(std::move(entries), dimension, std::move(provider_id), std::move(provider));
}

double cosine_similarity(const std::vector<double>& a, double norm_a, const std::vector<double>& b,
                         double norm_b) {
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot / (norm_a * norm_b);
}

std::vector<ChunkHit> query_chunks(const ChunkIndex& index, const std::string& query_text,
                                   std::size_t k) {
    if (k == 0) throw Error("query_chunks: k must be >= 1");
    if (index.size() == 0) return {};
    if (!index.provider()) throw ConfigError("query_chunks: index has no attached provider");

    auto query_vectors = index.provider()->embed({query_text});
    if (query_vectors.size() != 1 || query_vectors[0].size() != index.dimension()) {
        throw ProviderError("query_chunks: provider broke the embedding contract");
    }
    const auto& q = query_vectors[0];
    double qn = l2_norm(q);
    if (qn <= 0.0) throw ProviderError("query_chunks: zero query vector");

    std::vector<std::pair<double, const ChunkIndexEntry*>> scored;
    scored.reserve(index.size());
    for (const auto& entry : index.entries()) {
        scored.emplace_back(cosine_similarity(q, qn, entry.vector, entry.norm), &entry);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first > r.first;
        return l.second->chunk.chunk_id < r.second->chunk.chunk_id;
    });

    std::size_t count = std::min(k, scored.size());
    std::vector<ChunkHit> hits;
    hits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        hits.push_back({&scored[i].second->chunk, scored[i].first});
    }
    return hits;
}

std::string export_chunk_index(const ChunkIndex& index) {
    std::string out = "# iacbench chunk-index v1\n";
    out += "meta\t" + std::to_string(index.dimension()) + "\t" + index.provider_id() + "\n";
    for (const auto& entry : index.entries()) {
        nlohmann::json text_json = entry.chunk.text;
        out += "chunk\t" + entry.chunk.chunk_id + "\t" + entry.chunk.resource_name + "\t" +
               std::to_string(entry.chunk.ordinal) + "\t" +
               std::to_string(entry.chunk.overlap_with_previous) + "\t" + text_json.dump() + "\t" +
               format_vector(entry.vector) + "\n";
    }
    return out;
}

ChunkIndex import_chunk_index(std::string_view content,
                              std::shared_ptr<providers::EmbeddingProvider> provider) {
    std::vector<ChunkIndexEntry> entries;
    std::size_t dimension = 0;
    std::string provider_id;
    for (const auto& line : text::split_lines(content)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = text::split(line, '\t');
        if (fields[0] == "meta" && fields.size() == 3) {
            dimension = std::stoul(fields[1]);
            provider_id = fields[2];
            continue;
        }
        if (fields[0] != "chunk" || fields.size() != 7) {
            throw ParseError("chunk index import: malformed record: " + line);
        }
        ChunkIndexEntry entry;
        entry.chunk.chunk_id = fields[1];
        entry.chunk.resource_name = fields[2];
        entry.chunk.ordinal = std::stoi(fields[3]);
        entry.chunk.overlap_with_previous = std::stoul(fields[4]);
        nlohmann::json text_json = nlohmann::json::parse(fields[5], nullptr, false);
        if (text_json.is_discarded() || !text_json.is_string()) {
            throw ParseError("chunk index import: bad text field");
        }
        entry.chunk.text = text_json.get<std::string>();
        entry.vector = parse_vector(fields[6]);
        validate_vector(entry.vector, dimension, "chunk " + entry.chunk.chunk_id);
        entry.norm = l2_norm(entry.vector);
        entries.push_back(std::move(entry));
    }
    if (provider && provider->id() != provider_id) {
        throw ConfigError("chunk index import: index built with provider '" + provider_id +
                          "', attaching '" + provider->id() + "'");
    }
    return ChunkIndex(std::move(entries), dimension, provider_id, std::move(provider));
}

void save_chunk_index(const std::filesystem::path& path, const ChunkIndex& index) {
    fs::write_file(path, export_chunk_index(index));
}

ChunkIndex load_chunk_index(const std::filesystem::path& path,
                            std::shared_ptr<providers::EmbeddingProvider> provider) {
    return import_chunk_index(fs::read_file(path), std::move(provider));
}

} // namespace iacbench::index
