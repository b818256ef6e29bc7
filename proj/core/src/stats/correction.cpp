#include "iacbench/stats/correction.hpp"

#include "iacbench/common/errors.hpp"

namespace iacbench::stats {

std::vector<CorrectionDecision> bonferroni(const std::vector<double>& p_values, double alpha) {
    if (p_values.empty()) throw Error("bonferroni: at least one comparison required");
    const double adjusted = alpha / static_cast<double>(p_values.size());
    std::vector<CorrectionDecision> decisions;
    decisions.reserve(p_values.size());
    for (double p : p_values) {
        CorrectionDecision d;
        d.raw_p = p;
        d.raw_significant = p <= alpha;
        d.adjusted_significant = p <= adjusted;
        d.adjusted_alpha = adjusted;
        decisions.push_back(d);
    }
    return decisions;
}

} // namespace iacbench::stats
