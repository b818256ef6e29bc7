#pragma once

#include <map>
#include <optional>
#include <string>

namespace iacbench::stats {

// Paired pass/fail counts for two methods over the same prompt set.
// a: both pass, b: first only, c: second only, d: both fail.
struct ContingencyTable {
    long long a = 0;
    long long b = 0;
    long long c = 0;
    long long d = 0;
    std::string label1;
    std::string label2;

    long long total() const { return a + b + c + d; }
};

enum class OddsRatioKind {
    Finite,    // b > 0 and c > 0
    Infinite,  // b > 0, c == 0: reported as a +inf sentinel
    Zero,      // b == 0, c > 0
    Undefined, // b == c == 0
};

struct McNemarResult {
    double chi_squared = 0.0;
    double p_value = 1.0;
    double odds_ratio = 0.0; // meaningful only when or_kind == Finite
    OddsRatioKind or_kind = OddsRatioKind::Undefined;
    bool not_applicable = false; // b + c == 0: no discordant pairs
    std::map<double, bool> significant_at;

    std::string odds_ratio_text() const;
};

// McNemar's paired test: chi^2 = (b - c)^2 / (b + c), one degree of freedom.
// The continuity-corrected variant (|b - c| - 1)^2 / (b + c) is available
// behind the flag; the uncorrected statistic is the default.
McNemarResult mcnemar(const ContingencyTable& table, bool continuity_correction = false);

} // namespace iacbench::stats
