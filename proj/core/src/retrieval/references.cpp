#include "iacbench/retrieval/references.hpp"

#include <set>

#include "iacbench/common/text.hpp"

namespace iacbench::retrieval {

namespace {

void list_arguments(const ingest::BlockSpec& block, std::string& out) {
    for (const auto& arg : block.nested_arguments) {
        out += "- " + arg.id + " (" + arg.value_type + ")\n";
    }
    for (const auto& nested : block.nested_blocks) list_arguments(nested, out);
}

} // namespace

std::string reference_prompt(const ingest::EnrichedResourceSchema& schema) {
    std::string prompt = "Resource: " + schema.resource_name + "\n";
    prompt += "Arguments:\n";
    for (const auto& arg : schema.arguments) {
        prompt += "- " + arg.id + " (" + arg.value_type + ")";
        if (!arg.description.empty()) prompt += ": " + arg.description;
        prompt += "\n";
    }
    for (const auto& block : schema.blocks) list_arguments(block, prompt);
    prompt += "\nIdentify the arguments above that must reference outputs from other resources.\n";
    prompt += "Answer with one line per dependency, formatted exactly as:\n";
    prompt += "<argument> -> <resource_type>.<element>\n";
    prompt += "Answer NONE if there are no such dependencies.";
    return prompt;
}

bool parse_reference_reply(const std::string& source_resource, const std::string& reply,
                           std::vector<kg::ReferenceCandidate>& out) {
    bool any = false;
    if (text::trim(reply) == "NONE") return true;
    for (const auto& line : text::split_lines(reply)) {
        std::string trimmed = text::trim(line);
        if (trimmed.empty()) continue;
        auto arrow = trimmed.find("->");
        if (arrow == std::string::npos) continue;
        std::string arg = text::trim(trimmed.substr(0, arrow));
        std::string target = text::trim(trimmed.substr(arrow + 2));
        auto dot = target.find('.');
        if (arg.empty() || dot == std::string::npos || dot == 0 || dot + 1 == target.size()) continue;
        kg::ReferenceCandidate candidate;
        candidate.source_resource = source_resource;
        candidate.source_argument = arg;
        candidate.target_resource = target.substr(0, dot);
        candidate.target_element = target.substr(dot + 1);
        out.push_back(std::move(candidate));
        any = true;
    }
    return any;
}

ReferenceExtraction
extract_reference_candidates(const std::vector<ingest::EnrichedResourceSchema>& schemas,
                             providers::GenerationProvider& generator) {
    ReferenceExtraction result;
    std::set<std::string> known;
    for (const auto& schema : schemas) known.insert(schema.resource_name);

    for (const auto& schema : schemas) {
        std::string reply;
        try {
            reply = generator.generate(reference_prompt(schema), 0.0);
        } catch (const std::exception& e) {
            result.diagnostics.push_back("generator failed for " + schema.resource_name + ": " +
                                         e.what());
            continue;
        }
        std::vector<kg::ReferenceCandidate> parsed;
        if (!parse_reference_reply(schema.resource_name, reply, parsed)) {
            result.diagnostics.push_back("unparseable reply for " + schema.resource_name);
            continue;
        }
        for (auto& candidate : parsed) {
            if (!known.count(candidate.target_resource)) {
                result.filtered.push_back(candidate.source_resource + "." +
                                          candidate.source_argument + " -> " +
                                          candidate.target_resource + "." + candidate.target_element +
                                          " (unknown target resource)");
                continue;
            }
            result.candidates.push_back(std::move(candidate));
        }
    }
    return result;
}

} // namespace iacbench::retrieval
