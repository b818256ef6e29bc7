#include "iacbench/index/chunker.hpp"

#include <array>
#include <cstdio>

#include "iacbench/common/errors.hpp"

namespace iacbench::index {

namespace {

struct Separator {
    std::string_view token;
    // Offset from the match position to the split point. Heading separators
    // split after the newline so the heading starts the next chunk; paragraph
    // and sentence separators stay with the previous chunk.
    std::size_t boundary_offset;
};

constexpr std::array<Separator, 5> kSeparators = {{
    {"\n## ", 1},
    {"\n### ", 1},
    {"\n\n", 2},
    {"\n", 1},
    {". ", 2},
}};

// Highest-priority separator boundary in (start, limit]; picks the last
// occurrence of the first separator class that has one in range.
// Returns npos when no separator fits.
std::size_t find_boundary(std::string_view text, std::size_t start, std::size_t limit) {
    for (const auto& sep : kSeparators) {
        std::size_t best = std::string_view::npos;
        std::size_t pos = start;
        while (true) {
            std::size_t q = text.find(sep.token, pos);
            if (q == std::string_view::npos) break;
            std::size_t b = q + sep.boundary_offset;
            if (b > limit) break;
            if (b > start) best = b;
            pos = q + 1;
        }
        if (best != std::string_view::npos) return best;
    }
    return std::string_view::npos;
}

// Earliest separator-aligned position in [lo, boundary) where the next chunk
// may begin, or npos when the window holds none.
std::size_t find_overlap_start(std::string_view text, std::size_t lo, std::size_t boundary) {
    std::size_t best = std::string_view::npos;
    for (const auto& sep : kSeparators) {
        std::size_t pos = lo >= sep.token.size() ? lo - sep.token.size() : 0;
        while (true) {
            std::size_t q = text.find(sep.token, pos);
            if (q == std::string_view::npos) break;
            std::size_t p = q + sep.boundary_offset;
            if (p >= boundary) break;
            if (p >= lo && p < best) best = p;
            pos = q + 1;
        }
    }
    return best;
}

} // namespace

std::vector<DocChunk> chunk_document(std::string_view text, const std::string& resource_name,
                                     const ChunkerConfig& config) {
    if (config.chunk_size == 0 || config.overlap >= config.chunk_size) {
        throw Error("chunk_document: overlap must be smaller than chunk size");
    }
    std::vector<DocChunk> chunks;
    if (text.empty()) return chunks;

    std::size_t start = 0;
    std::size_t overlap_len = 0;
    int ordinal = 0;

    while (true) {
        std::size_t remaining = text.size() - start;
        std::size_t end;
        bool forced = false;
        if (remaining <= config.chunk_size) {
            end = text.size();
        } else {
            end = find_boundary(text, start, start + config.chunk_size);
            if (end == std::string_view::npos) {
                end = start + config.chunk_size;
                forced = true;
            }
        }

        DocChunk chunk;
        char id[32];
        std::snprintf(id, sizeof(id), "%06d", ordinal);
        chunk.chunk_id = resource_name.empty() ? std::string(id) : resource_name + ":" + id;
        chunk.resource_name = resource_name;
        chunk.text = std::string(text.substr(start, end - start));
        chunk.ordinal = ordinal;
        chunk.overlap_with_previous = overlap_len;
        chunks.push_back(std::move(chunk));
        ++ordinal;

        if (end == text.size()) break;

        std::size_t next_start;
        if (forced) {
            next_start = end - config.overlap;
        } else {
            std::size_t lo = end > config.overlap ? end - config.overlap : 0;
            if (lo <= start) lo = start + 1; // progress guarantee
            std::size_t aligned = find_overlap_start(text, lo, end);
            next_start = aligned == std::string_view::npos ? end : aligned;
        }
        overlap_len = end - next_start;
        start = next_start;
    }
    return chunks;
}

} // namespace iacbench::index
