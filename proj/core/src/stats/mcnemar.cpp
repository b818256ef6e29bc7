#include "iacbench/stats/mcnemar.hpp"

#include <cmath>
#include <cstdio>

#include "iacbench/common/errors.hpp"
#include "iacbench/stats/gamma.hpp"

namespace iacbench::stats {

std::string McNemarResult::odds_ratio_text() const {
    switch (or_kind) {
    case OddsRatioKind::Infinite:
        return "+inf";
    case OddsRatioKind::Zero:
        return "0";
    case OddsRatioKind::Undefined:
        return "undefined";
    case OddsRatioKind::Finite:
        break;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", odds_ratio);
    return buf;
}

McNemarResult mcnemar(const ContingencyTable& table, bool continuity_correction) {
    if (table.a < 0 || table.b < 0 || table.c < 0 || table.d < 0) {
        throw Error("mcnemar: negative cell count");
    }
    McNemarResult result;
    const double b = static_cast<double>(table.b);
    const double c = static_cast<double>(table.c);
    const double discordant = b + c;

    if (discordant == 0.0) {
        result.not_applicable = true;
        result.chi_squared = 0.0;
        result.p_value = 1.0;
        result.or_kind = OddsRatioKind::Undefined;
    } else {
        double num = continuity_correction ? std::fabs(b - c) - 1.0 : b - c;
        if (continuity_correction && num < 0.0) num = 0.0;
        result.chi_squared = (num * num) / discordant;
        result.p_value = chi_squared_sf_1df(result.chi_squared);
        if (table.b > 0 && table.c > 0) {
            result.or_kind = OddsRatioKind::Finite;
            result.odds_ratio = b / c;
        } else if (table.b > 0) {
            result.or_kind = OddsRatioKind::Infinite;
        } else {
            result.or_kind = OddsRatioKind::Zero;
        }
    }

    for (double alpha : {0.05, 0.01, 0.001}) {
        result.significant_at[alpha] = !result.not_applicable && result.p_value <= alpha;
    }
    return result;
}

} // namespace iacbench::stats
