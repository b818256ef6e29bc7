#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iacbench/analyze/taxonomy.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::analyze {

struct ChangelogEntry {
    std::string version;
    text::YearMonth date;
    std::string resource; // best-effort primary resource mention ("" when none)
    std::string text_line;
};

// Provider changelog in the documented format: "## <version> (<date>)"
// headers set a running date context; "*" entries are indexed. Element
// matching is whole-token ("non-alphanumeric bounds").
class ChangelogIndex {
public:
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<ChangelogEntry>& entries() const { return entries_; }
    bool header_warning() const { return header_warning_; }

    // Entries mentioning both the resource and the element as whole tokens,
    // in release-date order.
    std::vector<const ChangelogEntry*> matching(const std::string& resource,
                                                const std::string& element) const;

    friend ChangelogIndex build_changelog_index(std::string_view markdown);

private:
    std::vector<ChangelogEntry> entries_; // ordered by release date
    bool header_warning_ = false;
};

ChangelogIndex build_changelog_index(std::string_view markdown);

// Deprecation rule: any matching entry at or before cutoff whose text
// contains "deprecated" makes the element Deprecated; otherwise it was never
// documented (hallucinated). Monotone in the cutoff.
Attribution attribute_element(const ChangelogIndex& index, const ErrorElement& element,
                              const text::YearMonth& cutoff);

} // namespace iacbench::analyze
