#include "iacbench/analyze/changelog.hpp"

#include <algorithm>

namespace iacbench::analyze {

namespace {

// First token that looks like a resource mention (contains an underscore),
// e.g. "resource/aws_foo: ..." -> "aws_foo".
std::string primary_resource_mention(const std::string& line) {
    for (const auto& token : text::word_tokens(line)) {
        if (token.find('_') != std::string::npos) return token;
    }
    return {};
}

} // namespace

std::vector<const ChangelogEntry*> ChangelogIndex::matching(const std::string& resource,
                                                            const std::string& element) const {
    std::vector<const ChangelogEntry*> hits;
    for (const auto& entry : entries_) {
        if (!text::contains_token(entry.text_line, resource)) continue;
        if (!text::contains_token(entry.text_line, element)) continue;
        hits.push_back(&entry);
    }
    return hits;
}

ChangelogIndex build_changelog_index(std::string_view markdown) {
    ChangelogIndex index;
    std::optional<text::YearMonth> date_context;
    std::string version_context;
    bool saw_header = false;

    for (const auto& line : text::split_lines(markdown)) {
        if (line.rfind("## ", 0) == 0) {
            // [C] Date Context: "## <version> (<date>)"
            std::string rest = text::trim(line.substr(3));
            auto open = rest.find('(');
            auto close = rest.rfind(')');
            if (open != std::string::npos && close != std::string::npos && close > open) {
                auto date = text::parse_year_month(rest.substr(open + 1, close - open - 1));
                if (date) {
                    date_context = date;
                    version_context = text::trim(rest.substr(0, open));
                    saw_header = true;
                    continue;
                }
            }
            date_context.reset();
            version_context.clear();
            continue;
        }
        // [C] Entry Identification: "*" lines under a date context
        std::string trimmed = text::trim(line);
        if (trimmed.rfind("* ", 0) != 0 || !date_context) continue;
        ChangelogEntry entry;
        entry.version = version_context;
        entry.date = *date_context;
        entry.text_line = trimmed;
        entry.resource = primary_resource_mention(trimmed);
        index.entries_.push_back(std::move(entry));
    }

    index.header_warning_ = !saw_header;
    std::stable_sort(index.entries_.begin(), index.entries_.end(),
                     [](const ChangelogEntry& l, const ChangelogEntry& r) { return l.date < r.date; });
    return index;
}

Attribution attribute_element(const ChangelogIndex& index, const ErrorElement& element,
                              const text::YearMonth& cutoff) {
    const std::string& resource =
        element.kind == ElementKind::Resource ? element.name : element.resource_type;
    for (const ChangelogEntry* entry : index.matching(resource, element.name)) {
        if (entry->date > cutoff) continue;
        if (entry->text_line.find("deprecated") != std::string::npos ||
            entry->text_line.find("Deprecated") != std::string::npos) {
            return Attribution::Deprecated;
        }
    }
    return Attribution::NeverDocumented;
}

} // namespace iacbench::analyze
