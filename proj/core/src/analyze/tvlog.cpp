#include "iacbench/analyze/tvlog.hpp"

#include "iacbench/common/text.hpp"

namespace iacbench::analyze {

namespace {

// First quoted span after `key`, e.g. key = "argument named" over
// `An argument named "set_identifier" is not expected here.`
std::optional<std::string> quoted_after(std::string_view message, std::string_view key) {
    std::size_t pos = message.find(key);
    if (pos == std::string_view::npos) return std::nullopt;
    std::size_t open = message.find('"', pos + key.size());
    if (open == std::string_view::npos) return std::nullopt;
    std::size_t close = message.find('"', open + 1);
    if (close == std::string_view::npos) return std::nullopt;
    return std::string(message.substr(open + 1, close - open - 1));
}

std::optional<SourceLocation> parse_location(std::string_view stanza) {
    for (const auto& line : text::split_lines(stanza)) {
        std::string trimmed = text::trim(line);
        if (trimmed.rfind("on ", 0) != 0) continue;
        std::size_t line_pos = trimmed.find(" line ");
        if (line_pos == std::string_view::npos) continue;
        SourceLocation loc;
        loc.file = trimmed.substr(3, line_pos - 3);
        std::size_t num_start = line_pos + 6;
        std::size_t num_end = num_start;
        while (num_end < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[num_end]))) {
            ++num_end;
        }
        if (num_end == num_start) continue;
        loc.line = std::stoi(trimmed.substr(num_start, num_end - num_start));
        return loc;
    }
    return std::nullopt;
}

std::optional<ErrorElement> extract_element(std::string_view stanza) {
    std::string resource_type = quoted_after(stanza, "in resource ").value_or("");
    if (resource_type.empty()) {
        resource_type = quoted_after(stanza, "resource type ").value_or("");
    }

    // [E] Argument Extraction
    if (auto arg = quoted_after(stanza, "argument named ")) {
        return ErrorElement{ElementKind::Argument, *arg, resource_type};
    }
    if (auto arg = quoted_after(stanza, "The argument ")) {
        return ErrorElement{ElementKind::Argument, *arg, resource_type};
    }
    // [E] Block Extraction
    if (auto block = quoted_after(stanza, "Blocks of type ")) {
        return ErrorElement{ElementKind::Block, *block, resource_type};
    }
    if (auto block = quoted_after(stanza, "blocks of type ")) {
        return ErrorElement{ElementKind::Block, *block, resource_type};
    }
    // [E] Resource Extraction: unrecognized-resource phrasing
    if (stanza.find("does not support resource type") != std::string_view::npos ||
        stanza.find("Invalid resource type") != std::string_view::npos) {
        if (auto res = quoted_after(stanza, "resource type ")) {
            return ErrorElement{ElementKind::Resource, *res, *res};
        }
        if (!resource_type.empty()) {
            return ErrorElement{ElementKind::Resource, resource_type, resource_type};
        }
    }
    if (stanza.find("Unsupported attribute") != std::string_view::npos) {
        if (auto attr = quoted_after(stanza, "attribute named ")) {
            return ErrorElement{ElementKind::Attribute, *attr, resource_type};
        }
    }
    return std::nullopt;
}

} // namespace

const char* to_string(ElementKind kind) {
    switch (kind) {
    case ElementKind::Argument:
        return "argument";
    case ElementKind::Block:
        return "block";
    case ElementKind::Resource:
        return "resource";
    case ElementKind::Attribute:
        return "attribute";
    }
    return "?";
}

std::vector<AtomicError> parse_tv_log(const std::string& script_id, std::string_view log_text) {
    std::vector<AtomicError> errors;
    std::vector<std::string> stanza_lines;
    bool in_stanza = false;

    auto flush = [&] {
        if (!in_stanza) return;
        AtomicError error;
        error.script_id = script_id;
        std::string stanza;
        for (const auto& line : stanza_lines) {
            stanza += line;
            stanza += '\n';
        }
        error.raw_message = stanza;
        error.summary = text::trim(stanza_lines.front().substr(6)); // after "Error:"
        error.element = extract_element(stanza);
        error.location = parse_location(stanza);
        errors.push_back(std::move(error));
        stanza_lines.clear();
    };

    for (const auto& line : text::split_lines(log_text)) {
        if (line.rfind("Error:", 0) == 0) {
            flush();
            in_stanza = true;
            stanza_lines.push_back(line);
        } else if (in_stanza) {
            stanza_lines.push_back(line);
        }
    }
    flush();
    return errors;
}

} // namespace iacbench::analyze
