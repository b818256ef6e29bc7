#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iacbench::text {

std::string trim(std::string_view s);

// Collapses every run of whitespace (space, tab, newline) to a single space.
// Does not trim; combine with trim() for full cleaning.
std::string collapse_whitespace(std::string_view s);

std::string to_lower(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

bool is_word_char(char c);

// True when `token` occurs in `haystack` bounded by non-word characters
// (or the string edges). Word characters are [A-Za-z0-9_].
bool contains_token(std::string_view haystack, std::string_view token);

// Tokens of `s`: maximal runs of word characters, lowercased.
std::vector<std::string> word_tokens(std::string_view s);

// Deterministic token count: each maximal word run counts as one token and
// every other non-space character counts as one. Used as the documented
// approximation for prompt/context token accounting.
std::size_t approx_token_count(std::string_view s);

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view s);

// Calendar month used for changelog dating and training-cutoff comparisons.
struct YearMonth {
    int year = 0;
    int month = 0; // 1..12

    auto operator<=>(const YearMonth&) const = default;
};

// Accepts "2023-10", "May 2023" and "May 26, 2023".
std::optional<YearMonth> parse_year_month(std::string_view s);

} // namespace iacbench::text
