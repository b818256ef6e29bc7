#pragma once

#include <string>
#include <utility>
#include <vector>

namespace iacbench::stats {

struct MethodSummary {
    std::string name;
    long long passes = 0;
    long long total = 0;

    double rate() const { return total == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(total); }
};

struct PairwiseTest {
    std::string method1;
    std::string method2;
    double p_value = 1.0;
};

enum class Correction { None, Bonferroni };

struct CdMethod {
    std::string name;
    double rate = 0.0;
    int rank = 0; // 1 = best
};

// Ranked methods plus the statistical-equivalence structure: an edge joins two
// methods whose pairwise test is non-significant after correction, and bars
// are the maximal cliques of that graph (size >= 2).
struct CdDiagramData {
    std::vector<CdMethod> methods; // rank order
    std::vector<std::pair<std::string, std::string>> equivalence_edges;
    std::vector<std::vector<std::string>> bars;
    double alpha = 0.05;
    double adjusted_alpha = 0.05;
};

CdDiagramData cd_diagram(const std::vector<MethodSummary>& summaries,
                         const std::vector<PairwiseTest>& pairwise, double alpha = 0.05,
                         Correction correction = Correction::Bonferroni);

std::string cd_to_json(const CdDiagramData& data);
std::string cd_to_svg(const CdDiagramData& data);

} // namespace iacbench::stats
