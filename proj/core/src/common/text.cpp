#include "iacbench/common/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>

namespace iacbench::text {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = false;
    for (char c : s) {
        if (is_space(c)) {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out.push_back(' ');
        in_ws = false;
        out.push_back(c);
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t nl = s.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(s.substr(pos));
            break;
        }
        std::string_view line = s.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t p = s.find(sep, pos);
        if (p == std::string_view::npos) {
            parts.emplace_back(s.substr(pos));
            break;
        }
        parts.emplace_back(s.substr(pos, p - pos));
        pos = p + 1;
    }
    return parts;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool contains_token(std::string_view haystack, std::string_view token) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    while ((pos = haystack.find(token, pos)) != std::string_view::npos) {
        bool left_ok = pos == 0 || !is_word_char(haystack[pos - 1]);
        std::size_t end = pos + token.size();
        bool right_ok = end == haystack.size() || !is_word_char(haystack[end]);
        if (left_ok && right_ok) return true;
        pos += 1;
    }
    return false;
}

std::vector<std::string> word_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        if (!is_word_char(s[i])) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < s.size() && is_word_char(s[i])) ++i;
        tokens.push_back(to_lower(s.substr(b, i - b)));
    }
    return tokens;
}

std::size_t approx_token_count(std::string_view s) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            ++count;
            while (i < s.size() && is_word_char(s[i])) ++i;
        } else {
            ++count;
            ++i;
        }
    }
    return count;
}

std::string fnv1a_hex(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::optional<YearMonth> parse_year_month(std::string_view s) {
    static const std::array<std::string_view, 12> months = {
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december"};

    std::string t = trim(s);
    if (t.empty()) return std::nullopt;

    // numeric form: YYYY-MM
    if (t.size() >= 6 && std::isdigit(static_cast<unsigned char>(t[0]))) {
        auto parts = split(t, '-');
        if (parts.size() == 2) {
            int y = 0;
            int m = 0;
            auto r1 = std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), y);
            auto r2 = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), m);
            if (r1.ec == std::errc() && r2.ec == std::errc() && m >= 1 && m <= 12) {
                return YearMonth{y, m};
            }
        }
        return std::nullopt;
    }

    // "May 2023" or "May 26, 2023"
    std::string lower = to_lower(t);
    int month = 0;
    for (std::size_t i = 0; i < months.size(); ++i) {
        if (lower.rfind(months[i], 0) == 0) {
            month = static_cast<int>(i) + 1;
            break;
        }
    }
    if (month == 0) return std::nullopt;

    // year = last run of 4 digits
    int year = 0;
    for (std::size_t i = 0; i + 4 <= lower.size(); ++i) {
        bool four = true;
        for (std::size_t j = 0; j < 4; ++j) {
            if (!std::isdigit(static_cast<unsigned char>(lower[i + j]))) {
                four = false;
                break;
            }
        }
        if (four) {
            year = (lower[i] - '0') * 1000 + (lower[i + 1] - '0') * 100 + (lower[i + 2] - '0') * 10 +
                   (lower[i + 3] - '0');
        }
    }
    if (year == 0) return std::nullopt;
    return YearMonth{year, month};
}

} // namespace iacbench::text
