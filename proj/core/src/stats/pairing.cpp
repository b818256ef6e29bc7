#include "iacbench/stats/pairing.hpp"

#include "iacbench/common/errors.hpp"

namespace iacbench::stats {

namespace {

void check_same_prompts(const MethodOutcomes& first, const MethodOutcomes& second) {
    std::vector<std::string> only_first;
    std::vector<std::string> only_second;
    for (const auto& [id, _] : first.by_prompt) {
        if (!second.by_prompt.count(id)) only_first.push_back(id);
    }
    for (const auto& [id, _] : second.by_prompt) {
        if (!first.by_prompt.count(id)) only_second.push_back(id);
    }
    if (only_first.empty() && only_second.empty()) return;

    std::string msg = "paired_table: prompt sets differ;";
    if (!only_first.empty()) {
        msg += " only in " + first.label + ":";
        for (const auto& id : only_first) msg += " " + id;
        msg += ";";
    }
    if (!only_second.empty()) {
        msg += " only in " + second.label + ":";
        for (const auto& id : only_second) msg += " " + id;
    }
    throw PairingError(msg);
}

} // namespace

ContingencyTable paired_table(const MethodOutcomes& first, const MethodOutcomes& second, Stage stage) {
    check_same_prompts(first, second);
    ContingencyTable table;
    table.label1 = first.label;
    table.label2 = second.label;
    for (const auto& [id, o1] : first.by_prompt) {
        const PromptOutcome& o2 = second.by_prompt.at(id);
        bool p1 = stage == Stage::Tv ? o1.tv_pass : o1.overall();
        bool p2 = stage == Stage::Tv ? o2.tv_pass : o2.overall();
        if (p1 && p2)
            ++table.a;
        else if (p1)
            ++table.b;
        else if (p2)
            ++table.c;
        else
            ++table.d;
    }
    return table;
}

MatchedIvResult matched_iv_compare(const MethodOutcomes& first, const MethodOutcomes& second,
                                   bool continuity_correction) {
    check_same_prompts(first, second);
    MatchedIvResult result;
    result.table.label1 = first.label;
    result.table.label2 = second.label;
    for (const auto& [id, o1] : first.by_prompt) {
        const PromptOutcome& o2 = second.by_prompt.at(id);
        if (!(o1.tv_pass && o2.tv_pass)) continue;
        ++result.matched_subset_size;
        if (o1.iv_pass && o2.iv_pass)
            ++result.table.a;
        else if (o1.iv_pass)
            ++result.table.b;
        else if (o2.iv_pass)
            ++result.table.c;
        else
            ++result.table.d;
    }
    if (result.matched_subset_size == 0) {
        result.not_applicable = true;
        result.test.not_applicable = true;
        result.test.p_value = 1.0;
        return result;
    }
    result.test = mcnemar(result.table, continuity_correction);
    return result;
}

} // namespace iacbench::stats
