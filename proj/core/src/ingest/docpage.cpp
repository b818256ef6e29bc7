#include "iacbench/ingest/docpage.hpp"

#include "iacbench/common/errors.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::ingest {

namespace {

int heading_level_of(std::string_view line) {
    std::size_t hashes = 0;
    while (hashes < line.size() && line[hashes] == '#') ++hashes;
    if (hashes == 0 || hashes > 3) return 0;
    if (hashes < line.size() && line[hashes] != ' ') return 0;
    return static_cast<int>(hashes);
}

// "- `name` - rest" -> {name, rest}; returns false when the line is not an
// element bullet.
bool parse_bullet(std::string_view line, std::string& name, std::string& rest) {
    std::string_view t = line;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    if (t.size() < 4 || (t[0] != '-' && t[0] != '*') || t[1] != ' ' || t[2] != '`') return false;
    std::size_t close = t.find('`', 3);
    if (close == std::string_view::npos || close == 3) return false;
    name = std::string(t.substr(3, close - 3));
    std::string_view after = t.substr(close + 1);
    while (!after.empty() && after.front() == ' ') after.remove_prefix(1);
    // drop the conventional "-"/":" separator between name and description
    if (!after.empty() && (after.front() == '-' || after.front() == ':')) {
        after.remove_prefix(1);
        while (!after.empty() && after.front() == ' ') after.remove_prefix(1);
    }
    rest = std::string(after);
    return true;
}

bool title_contains(const std::string& title, std::string_view needle) {
    return text::to_lower(title).find(text::to_lower(needle)) != std::string::npos;
}

} // namespace

DocPage parse_doc_page(std::string_view markdown) {
    if (text::trim(markdown).empty()) throw IngestError("doc page: empty file");

    DocPage page;
    page.raw_markdown = std::string(markdown);

    auto lines = text::split_lines(markdown);
    DocSection current;
    bool in_section = false;
    bool in_fence = false;

    auto flush = [&] {
        if (in_section) page.sections.push_back(current);
        current = DocSection{};
        in_section = false;
    };

    for (const auto& line : lines) {
        if (line.rfind("```", 0) == 0) in_fence = !in_fence;
        int level = in_fence ? 0 : heading_level_of(line);
        if (level > 0) {
            flush();
            in_section = true;
            current.heading_level = level;
            current.title = text::trim(line.substr(static_cast<std::size_t>(level)));
        } else if (in_section) {
            current.body += line;
            current.body += '\n';
        }
    }
    flush();

    for (const auto& section : page.sections) {
        if (section.heading_level != 1) continue;
        if (section.title.rfind("Resource:", 0) == 0) {
            page.resource_name = text::trim(section.title.substr(9));
            // rule [R]: description is the text between the title and the
            // first "##" section
            page.description = text::trim(section.body);
            break;
        }
    }
    if (page.resource_name.empty()) {
        throw IngestError("doc page: no \"# Resource: <name>\" heading found");
    }
    return page;
}

DocElements extract_doc_elements(const DocPage& page) {
    DocElements out;

    enum class Zone { None, Arguments, Attributes, Examples };
    Zone zone = Zone::None;
    std::string section_context = "top-level";
    std::string pending_example_title;

    bool in_fence = false;
    std::string fence_code;

    auto finish_entry_text = [](std::string& target, const std::string& line) {
        std::string extra = text::trim(line);
        if (extra.empty()) return;
        if (!target.empty()) target += ' ';
        target += extra;
    };

    ArgDocEntry* open_arg = nullptr;
    AttrDocEntry* open_attr = nullptr;

    for (const auto& section : page.sections) {
        if (section.heading_level == 2) {
            open_arg = nullptr;
            open_attr = nullptr;
            section_context = "top-level";
            pending_example_title.clear();
            if (title_contains(section.title, "argument reference"))
                zone = Zone::Arguments;
            else if (title_contains(section.title, "attribute reference"))
                zone = Zone::Attributes;
            else if (title_contains(section.title, "example usage"))
                zone = Zone::Examples;
            else
                zone = Zone::None;
        } else if (section.heading_level == 3) {
            open_arg = nullptr;
            open_attr = nullptr;
            if (zone == Zone::Arguments) {
                // "###" heading resets the argument section context
                section_context = section.title;
            } else if (zone == Zone::Examples) {
                pending_example_title = section.title;
            }
        } else if (section.heading_level == 1) {
            zone = Zone::None;
            continue;
        }

        if (zone == Zone::None) continue;

        for (const auto& line : text::split_lines(section.body)) {
            if (zone == Zone::Examples) {
                if (line.rfind("```", 0) == 0) {
                    if (!in_fence) {
                        in_fence = true;
                        fence_code.clear();
                    } else {
                        in_fence = false;
                        std::string title = pending_example_title;
                        if (title.empty()) {
                            title = out.examples.empty()
                                        ? "Basic Usage"
                                        : "Example " + std::to_string(out.examples.size() + 1);
                        }
                        pending_example_title.clear();
                        out.examples.push_back({title, fence_code});
                    }
                    continue;
                }
                if (in_fence) {
                    fence_code += line;
                    fence_code += '\n';
                }
                continue;
            }

            std::string name;
            std::string rest;
            if (parse_bullet(line, name, rest)) {
                if (zone == Zone::Arguments) {
                    out.arg_descriptions.push_back({section_context, name, rest});
                    open_arg = &out.arg_descriptions.back();
                    open_attr = nullptr;
                } else {
                    out.attr_descriptions.push_back({name, rest});
                    open_attr = &out.attr_descriptions.back();
                    open_arg = nullptr;
                }
                continue;
            }
            if (text::trim(line).empty()) {
                open_arg = nullptr;
                open_attr = nullptr;
                continue;
            }
            // continuation text belongs to the bullet above it
            if (open_arg) finish_entry_text(open_arg->text, line);
            if (open_attr) finish_entry_text(open_attr->text, line);
        }
        in_fence = false;
    }
    return out;
}

} // namespace iacbench::ingest
