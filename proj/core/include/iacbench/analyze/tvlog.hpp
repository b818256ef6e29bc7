#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iacbench::analyze {

enum class ElementKind { Argument, Block, Resource, Attribute };

const char* to_string(ElementKind kind);

// Schema element extracted from an error message by the extraction rules.
struct ErrorElement {
    ElementKind kind = ElementKind::Argument;
    std::string name;
    std::string resource_type;
};

struct SourceLocation {
    std::string file;
    int line = 0;
};

struct AtomicError {
    std::string script_id;
    std::string summary;     // text after "Error: " on the stanza's first line
    std::string raw_message; // full stanza
    std::optional<ErrorElement> element;
    std::optional<SourceLocation> location;
};

// Splits a technical-validation log into "Error:" stanzas (one atomic error
// per stanza; a stanza runs to the next "Error:" line or end of log) and
// applies the element-extraction rules: "argument named", "Blocks of type",
// unrecognized-resource phrasing, plus "on <file> line <n>" locations.
// Unmatched stanzas become atomic errors without element detail.
std::vector<AtomicError> parse_tv_log(const std::string& script_id, std::string_view log_text);

} // namespace iacbench::analyze
