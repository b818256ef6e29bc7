#include "iacbench/retrieval/prompt.hpp"

#include "iacbench/common/errors.hpp"
#include "iacbench/common/text.hpp"

namespace iacbench::retrieval {

const char* to_string(StrategyId id) {
    switch (id) {
    case StrategyId::NoRag:
        return "NO_RAG";
    case StrategyId::NaiveRag:
        return "NAIVE_RAG";
    case StrategyId::GrBase:
        return "GR_BASE";
    case StrategyId::GrOptMatch:
        return "GR_OPTMATCH";
    case StrategyId::GrLlmSum:
        return "GR_LLMSUM";
    case StrategyId::GrRef:
        return "GR_REF";
    }
    return "?";
}

StrategyId strategy_from_string(const std::string& s) {
    if (s == "NO_RAG") return StrategyId::NoRag;
    if (s == "NAIVE_RAG") return StrategyId::NaiveRag;
    if (s == "GR_BASE") return StrategyId::GrBase;
    if (s == "GR_OPTMATCH") return StrategyId::GrOptMatch;
    if (s == "GR_LLMSUM") return StrategyId::GrLlmSum;
    if (s == "GR_REF") return StrategyId::GrRef;
    throw ConfigError("unknown strategy id: " + s);
}

std::string assemble_prompt(StrategyId strategy, const std::string& user_query,
                            const std::string& context) {
    if (strategy == StrategyId::NoRag) {
        if (!context.empty()) throw ConfigError("assemble_prompt: NO_RAG takes no context");
        return user_query;
    }
    std::string prompt = "Here is additional knowledge retrieved from Terraform documentation that "
                         "may help answer the question:\n";
    prompt += "DOCUMENTATION: " + context + "\n";
    prompt += "USER QUERY: " + user_query + "\n";
    prompt += "Generate the appropriate Terraform code to address the query.";
    return prompt;
}

std::string extract_code(const std::string& reply) {
    std::string code;
    bool in_fence = false;
    bool saw_fence = false;
    for (const auto& line : text::split_lines(reply)) {
        if (line.rfind("```", 0) == 0) {
            in_fence = !in_fence;
            saw_fence = true;
            continue;
        }
        if (in_fence) {
            code += line;
            code += '\n';
        }
    }
    return saw_fence ? code : reply;
}

} // namespace iacbench::retrieval
