#pragma once

#include <string>
#include <vector>

namespace iacbench::retrieval {

enum class StrategyId { NoRag, NaiveRag, GrBase, GrOptMatch, GrLlmSum, GrRef };

const char* to_string(StrategyId id);
StrategyId strategy_from_string(const std::string& s);

// Prompt assembly. NO_RAG is the user query alone; every other strategy wraps
// the retrieved context and the query in the fixed augmentation template, with
// the query after the context.
std::string assemble_prompt(StrategyId strategy, const std::string& user_query,
                            const std::string& context);

// Pulls fenced code blocks out of a generator reply; a reply without fences
// is passed through as code unchanged.
std::string extract_code(const std::string& reply);

} // namespace iacbench::retrieval
