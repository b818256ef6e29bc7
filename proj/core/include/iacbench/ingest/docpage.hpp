#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace iacbench::ingest {

struct DocSection {
    int heading_level = 0; // 1..3
    std::string title;
    std::string body;
};

struct DocPage {
    std::string resource_name;
    std::string raw_markdown;
    std::string description; // text between the resource heading and the first "##" section
    std::vector<DocSection> sections;
};

// One argument bullet with the "###" section context it appeared under
// ("top-level" before any subsection heading).
struct ArgDocEntry {
    std::string section_context;
    std::string name;
    std::string text;
};

struct AttrDocEntry {
    std::string name;
    std::string text;
};

struct ExampleDocEntry {
    std::string title;
    std::string code;
};

struct DocElements {
    std::vector<ArgDocEntry> arg_descriptions;
    std::vector<AttrDocEntry> attr_descriptions;
    std::vector<ExampleDocEntry> examples;
};

// Parses a documentation page. Raises IngestError when the page has no
// "# Resource: <name>" heading or is empty.
DocPage parse_doc_page(std::string_view markdown);

// Applies the bullet/example extraction rules to a parsed page. Unmatched
// lines are ignored; this never fails.
DocElements extract_doc_elements(const DocPage& page);

} // namespace iacbench::ingest
