#pragma once

#include <vector>

namespace iacbench::stats {

struct CorrectionDecision {
    double raw_p = 1.0;
    bool raw_significant = false;      // raw_p <= alpha
    bool adjusted_significant = false; // raw_p <= alpha / k
    double adjusted_alpha = 0.0;
};

// Bonferroni family-wise correction over k = p_values.size() comparisons.
std::vector<CorrectionDecision> bonferroni(const std::vector<double>& p_values, double alpha = 0.05);

} // namespace iacbench::stats
