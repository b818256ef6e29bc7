#include "iacbench/ingest/enrich.hpp"

#include <deque>
#include <functional>

#include "iacbench/common/text.hpp"

namespace iacbench::ingest {

namespace {

void build_block(BlockSpec& out, const RawBlock& in, const std::string& parent_id,
                 const std::string& resource) {
    out.name = in.name;
    out.cardinality = in.cardinality;
    out.id = parent_id.empty() ? in.name : parent_id + "." + in.name;
    out.owning_resource = resource;
    for (const auto& arg : in.arguments) {
        ArgumentSpec spec;
        spec.name = arg.name;
        spec.value_type = arg.value_type;
        spec.required = arg.required;
        spec.id = out.id + "." + arg.name;
        spec.owning_resource = resource;
        out.nested_arguments.push_back(std::move(spec));
    }
    for (const auto& nested : in.blocks) {
        BlockSpec child;
        build_block(child, nested, out.id, resource);
        out.nested_blocks.push_back(std::move(child));
    }
}

// Blocks in breadth-first order; the cascade's match order is total because
// this order and the doc-entry order are both fixed.
std::vector<BlockSpec*> blocks_bfs(EnrichedResourceSchema& schema) {
    std::vector<BlockSpec*> order;
    std::deque<BlockSpec*> queue;
    for (auto& b : schema.blocks) queue.push_back(&b);
    while (!queue.empty()) {
        BlockSpec* b = queue.front();
        queue.pop_front();
        order.push_back(b);
        for (auto& nested : b->nested_blocks) queue.push_back(&nested);
    }
    return order;
}

ArgumentSpec* find_arg(BlockSpec& block, const std::string& name) {
    for (auto& a : block.nested_arguments) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

ArgumentSpec* find_arg_in_subtree(BlockSpec& block, const std::string& name) {
    std::deque<BlockSpec*> queue{&block};
    while (!queue.empty()) {
        BlockSpec* b = queue.front();
        queue.pop_front();
        if (ArgumentSpec* a = find_arg(*b, name)) return a;
        for (auto& nested : b->nested_blocks) queue.push_back(&nested);
    }
    return nullptr;
}

std::string normalized_path(const BlockSpec& block) {
    std::string joined;
    for (const auto& part : text::split(block.id, '.')) {
        if (!joined.empty()) joined += "_";
        joined += normalize_section_name(part);
    }
    return joined;
}

bool requirement_marker_mismatch(const std::string& doc_text, bool schema_required) {
    std::string lowered = text::to_lower(doc_text);
    bool says_required = lowered.rfind("(required)", 0) == 0;
    bool says_optional = lowered.rfind("(optional)", 0) == 0;
    if (says_required && !schema_required) return true;
    if (says_optional && schema_required) return true;
    return false;
}

} // namespace

EnrichedResourceSchema schema_skeleton(const RawSchemaDump& dump) {
    EnrichedResourceSchema schema;
    schema.resource_name = dump.resource_name;
    for (const auto& arg : dump.arguments) {
        ArgumentSpec spec;
        spec.name = arg.name;
        spec.value_type = arg.value_type;
        spec.required = arg.required;
        spec.id = arg.name;
        spec.owning_resource = dump.resource_name;
        schema.arguments.push_back(std::move(spec));
    }
    for (const auto& block : dump.blocks) {
        BlockSpec spec;
        build_block(spec, block, "", dump.resource_name);
        schema.blocks.push_back(std::move(spec));
    }
    for (const auto& attr : dump.attributes) {
        schema.attributes.push_back({attr.name, attr.value_type, ""});
    }
    return schema;
}

std::string clean_description(std::string_view raw) {
    // collapse whitespace outside backtick spans, keep spans verbatim
    std::string collapsed;
    collapsed.reserve(raw.size());
    bool in_backticks = false;
    bool pending_space = false;
    for (char c : raw) {
        if (c == '`') {
            if (pending_space && !collapsed.empty()) collapsed.push_back(' ');
            pending_space = false;
            in_backticks = !in_backticks;
            collapsed.push_back(c);
            continue;
        }
        if (in_backticks) {
            collapsed.push_back(c);
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            pending_space = true;
            continue;
        }
        if (pending_space && !collapsed.empty()) collapsed.push_back(' ');
        pending_space = false;
        collapsed.push_back(c);
    }
    return text::trim(collapsed);
}

std::string normalize_section_name(std::string_view section) {
    std::string lowered = text::to_lower(section);
    // strip the literal tokens "block" and ":"
    std::string stripped;
    stripped.reserve(lowered.size());
    std::size_t i = 0;
    while (i < lowered.size()) {
        if (lowered.compare(i, 5, "block") == 0 &&
            (i + 5 == lowered.size() || !text::is_word_char(lowered[i + 5])) &&
            (i == 0 || !text::is_word_char(lowered[i - 1]))) {
            i += 5;
            continue;
        }
        if (lowered[i] == ':') {
            ++i;
            continue;
        }
        stripped.push_back(lowered[i]);
        ++i;
    }
    std::string collapsed = text::trim(text::collapse_whitespace(stripped));
    for (char& c : collapsed) {
        if (c == ' ') c = '_';
    }
    return collapsed;
}

EnrichmentResult match_and_enrich(const RawSchemaDump& schema, const DocElements& elements,
                                  const std::string& page_description) {
    EnrichmentResult result;
    result.schema = schema_skeleton(schema);
    result.schema.description = clean_description(page_description);

    auto block_order = blocks_bfs(result.schema);

    auto assign = [&](ArgumentSpec* target, const ArgDocEntry& entry) -> bool {
        if (!target->description.empty()) {
            // first match in document order wins; later entries orphan
            result.orphans.push_back(
                {entry.section_context, entry.name, entry.text, "already described"});
            return true;
        }
        target->description = clean_description(entry.text);
        if (requirement_marker_mismatch(entry.text, target->required)) {
            result.warnings.push_back("requirement marker in docs disagrees with schema flag for " +
                                      result.schema.resource_name + "." + target->id);
        }
        return true;
    };

    for (const auto& entry : elements.arg_descriptions) {
        std::string ctx = entry.section_context == "top-level"
                              ? std::string("top-level")
                              : normalize_section_name(entry.section_context);

        // 1. top-level direct match
        if (ctx == "top-level") {
            bool placed = false;
            for (auto& arg : result.schema.arguments) {
                if (arg.name == entry.name) {
                    assign(&arg, entry);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                result.orphans.push_back(
                    {entry.section_context, entry.name, entry.text, "no top-level argument"});
            }
            continue;
        }

        // 2. block-context match via normalized section names
        BlockSpec* context_block = nullptr;
        for (BlockSpec* b : block_order) {
            if (normalize_section_name(b->name) == ctx) {
                context_block = b;
                break;
            }
        }
        if (context_block) {
            if (ArgumentSpec* a = find_arg(*context_block, entry.name)) {
                assign(a, entry);
                continue;
            }
            // 3a. hierarchical fallback: descend into the context block
            if (ArgumentSpec* a = find_arg_in_subtree(*context_block, entry.name)) {
                assign(a, entry);
                continue;
            }
        }

        // 3b. combined section paths (path-based matching for nested blocks)
        bool placed = false;
        for (BlockSpec* b : block_order) {
            if (normalized_path(*b) == ctx) {
                if (ArgumentSpec* a = find_arg(*b, entry.name)) {
                    assign(a, entry);
                    placed = true;
                }
                break;
            }
        }
        if (placed) continue;

        // 3c. top-level fallback
        for (auto& arg : result.schema.arguments) {
            if (arg.name == entry.name) {
                assign(&arg, entry);
                placed = true;
                break;
            }
        }
        if (placed) continue;

        // 3d. name-based section matching: unique block whose normalized name
        // contains (or is contained in) the section, holding the argument
        ArgumentSpec* candidate = nullptr;
        bool ambiguous = false;
        for (BlockSpec* b : block_order) {
            std::string bn = normalize_section_name(b->name);
            if (bn.empty() || ctx.empty()) continue;
            if (bn.find(ctx) == std::string::npos && ctx.find(bn) == std::string::npos) continue;
            if (ArgumentSpec* a = find_arg(*b, entry.name)) {
                if (candidate) {
                    ambiguous = true;
                    break;
                }
                candidate = a;
            }
        }
        if (candidate && !ambiguous) {
            assign(candidate, entry);
            continue;
        }

        result.orphans.push_back({entry.section_context, entry.name, entry.text,
                                  ambiguous ? "ambiguous section match" : "no matching schema field"});
    }

    for (const auto& entry : elements.attr_descriptions) {
        bool placed = false;
        for (auto& attr : result.schema.attributes) {
            if (attr.name != entry.name) continue;
            if (!attr.description.empty()) {
                result.orphans.push_back({"attributes", entry.name, entry.text, "already described"});
            } else {
                attr.description = clean_description(entry.text);
            }
            placed = true;
            break;
        }
        if (!placed) {
            result.orphans.push_back({"attributes", entry.name, entry.text, "no matching attribute"});
        }
    }

    int index = 0;
    for (const auto& example : elements.examples) {
        result.schema.examples.push_back({example.title, example.code, index++});
    }
    return result;
}

} // namespace iacbench::ingest
