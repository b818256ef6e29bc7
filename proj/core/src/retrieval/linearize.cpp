#include "iacbench/retrieval/linearize.hpp"

namespace iacbench::retrieval {

namespace {

std::string cardinality_text(const kg::Cardinality& c) {
    std::string out = std::to_string(c.min) + "-";
    out += c.max ? std::to_string(*c.max) : "unbounded";
    return out;
}

std::string arg_line(const kg::SubgraphArg& arg, bool with_description, std::size_t indent) {
    std::string line(indent, ' ');
    line += "- " + arg.name + " (" + arg.type + ")";
    if (with_description && !arg.description.empty()) line += ": " + arg.description;
    line += "\n";
    return line;
}

void render_block(const kg::SubgraphBlock& block, std::size_t depth, std::string& out,
                  std::vector<ProvenanceEntry>& provenance) {
    provenance.emplace_back("block", block.node_id);
    out += std::string(depth, ' ') + block.name + " (cardinality: " + cardinality_text(block.cardinality) +
           "):\n";
    for (const auto& arg : block.required_arguments) {
        provenance.emplace_back("argument", arg.node_id);
        out += arg_line(arg, true, depth + 1);
    }
    for (const auto& arg : block.optional_arguments) {
        provenance.emplace_back("argument", arg.node_id);
        out += arg_line(arg, false, depth + 1);
    }
    for (const auto& nested : block.required_blocks) {
        render_block(nested, depth + 1, out, provenance);
    }
    for (const auto& ref : block.optional_block_names) {
        provenance.emplace_back("block", ref.node_id);
        out += std::string(depth + 1, ' ') + ref.name + " (cardinality: " +
               cardinality_text(ref.cardinality) + ")\n";
    }
}

} // namespace

LinearizedContext linearize(const std::vector<kg::ResourceSubgraph>& subgraphs) {
    LinearizedContext context;
    for (std::size_t i = 0; i < subgraphs.size(); ++i) {
        const auto& sub = subgraphs[i];
        if (i > 0) context.text += "\n";
        context.provenance.emplace_back("resource", sub.resource_name);

        context.text += "RESOURCE: " + sub.resource_name + "\n";
        context.text += "Description: " + sub.description + "\n";

        context.text += "REQUIRED ARGUMENTS:\n";
        for (const auto& arg : sub.required_arguments) {
            context.provenance.emplace_back("argument", arg.node_id);
            context.text += arg_line(arg, true, 0);
        }

        context.text += "OPTIONAL ARGUMENTS:\n";
        for (const auto& arg : sub.optional_arguments) {
            context.provenance.emplace_back("argument", arg.node_id);
            context.text += arg_line(arg, sub.optional_args_detailed, 0);
        }

        context.text += "REQUIRED BLOCKS:\n";
        for (const auto& block : sub.required_blocks) {
            render_block(block, 0, context.text, context.provenance);
        }
        for (const auto& block : sub.selected_optional_blocks) {
            render_block(block, 0, context.text, context.provenance);
        }

        context.text += "BASIC USAGE EXAMPLE:\n";
        if (sub.example) {
            context.provenance.emplace_back("example", sub.example->node_id);
            context.text += sub.example->code;
            if (!sub.example->code.empty() && sub.example->code.back() != '\n') context.text += "\n";
        }
    }
    return context;
}

} // namespace iacbench::retrieval
