#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace iacbench::index {

struct DocChunk {
    std::string chunk_id;
    std::string resource_name;
    std::string text; // <= chunk_size characters
    int ordinal = 0;
    // Characters shared with the previous chunk. Stripping this prefix from
    // every chunk after the first and concatenating reconstructs the source.
    std::size_t overlap_with_previous = 0;
};

struct ChunkerConfig {
    std::size_t chunk_size = 1500;
    std::size_t overlap = 150;
};

// Recursive character splitting. Separators tried in priority order
// "\n## ", "\n### ", "\n\n", "\n", ". ", then a forced character split.
// A forced split overlaps by exactly `overlap` characters; a separator split
// overlaps by the trailing <= overlap characters of the previous chunk
// starting at a separator-aligned position (possibly none).
std::vector<DocChunk> chunk_document(std::string_view text, const std::string& resource_name = "",
                                     const ChunkerConfig& config = {});

} // namespace iacbench::index
