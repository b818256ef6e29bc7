#include "iacbench/stats/cd_diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "iacbench/common/errors.hpp"

namespace iacbench::stats {

namespace {

using Clique = std::set<int>;

// Bron-Kerbosch without pivoting; method counts are small. Isolated methods
// surface as singleton cliques.
void enumerate_cliques(const std::vector<std::set<int>>& adj, Clique r, Clique p, Clique x,
                       std::vector<Clique>& out) {
    if (p.empty() && x.empty()) {
        if (!r.empty()) out.push_back(r);
        return;
    }
    Clique p_copy = p;
    for (int v : p_copy) {
        Clique r2 = r;
        r2.insert(v);
        Clique p2;
        Clique x2;
        for (int u : p)
            if (adj[static_cast<std::size_t>(v)].count(u)) p2.insert(u);
        for (int u : x)
            if (adj[static_cast<std::size_t>(v)].count(u)) x2.insert(u);
        enumerate_cliques(adj, r2, p2, x2, out);
        p.erase(v);
        x.insert(v);
    }
}

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", rate);
    return buf;
}

} // namespace

CdDiagramData cd_diagram(const std::vector<MethodSummary>& summaries,
                         const std::vector<PairwiseTest>& pairwise, double alpha,
                         Correction correction) {
    if (summaries.size() < 2) throw Error("cd_diagram: at least two methods required");

    CdDiagramData data;
    data.alpha = alpha;

    // Rank by success rate, ties broken by ascending name.
    std::vector<MethodSummary> ranked = summaries;
    std::sort(ranked.begin(), ranked.end(), [](const MethodSummary& l, const MethodSummary& r) {
        if (l.rate() != r.rate()) return l.rate() > r.rate();
        return l.name < r.name;
    });
    std::map<std::string, int> index_of;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        data.methods.push_back({ranked[i].name, ranked[i].rate(), static_cast<int>(i) + 1});
        index_of[ranked[i].name] = static_cast<int>(i);
    }

    const std::size_t n = ranked.size();
    const std::size_t expected_pairs = n * (n - 1) / 2;

    std::map<std::pair<int, int>, double> p_of;
    for (const auto& pw : pairwise) {
        auto it1 = index_of.find(pw.method1);
        auto it2 = index_of.find(pw.method2);
        if (it1 == index_of.end() || it2 == index_of.end()) {
            throw Error("cd_diagram: pairwise result references unknown method " + pw.method1 + "/" +
                        pw.method2);
        }
        auto key = std::minmax(it1->second, it2->second);
        p_of[{key.first, key.second}] = pw.p_value;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!p_of.count({static_cast<int>(i), static_cast<int>(j)})) {
                throw Error("cd_diagram: missing pairwise result for " + ranked[i].name + " vs " +
                            ranked[j].name);
            }
        }
    }
    if (p_of.size() != expected_pairs) throw Error("cd_diagram: duplicate pairwise results");

    const double threshold =
        correction == Correction::Bonferroni ? alpha / static_cast<double>(expected_pairs) : alpha;
    data.adjusted_alpha = threshold;

    std::vector<std::set<int>> adj(n);
    for (const auto& [key, p] : p_of) {
        if (p > threshold) { // non-significant pair: statistically equivalent
            adj[static_cast<std::size_t>(key.first)].insert(key.second);
            adj[static_cast<std::size_t>(key.second)].insert(key.first);
            data.equivalence_edges.emplace_back(ranked[static_cast<std::size_t>(key.first)].name,
                                                ranked[static_cast<std::size_t>(key.second)].name);
        }
    }

    Clique p_all;
    for (std::size_t i = 0; i < n; ++i) p_all.insert(static_cast<int>(i));
    std::vector<Clique> cliques;
    enumerate_cliques(adj, {}, p_all, {}, cliques);

    std::sort(cliques.begin(), cliques.end(), [](const Clique& l, const Clique& r) {
        if (*l.begin() != *r.begin()) return *l.begin() < *r.begin();
        if (l.size() != r.size()) return l.size() > r.size();
        return l < r;
    });
    for (const auto& clique : cliques) {
        std::vector<std::string> names;
        for (int idx : clique) names.push_back(ranked[static_cast<std::size_t>(idx)].name);
        data.bars.push_back(names);
    }
    return data;
}

std::string cd_to_json(const CdDiagramData& data) {
    nlohmann::json j;
    j["alpha"] = data.alpha;
    j["adjusted_alpha"] = data.adjusted_alpha;
    j["methods"] = nlohmann::json::array();
    for (const auto& m : data.methods) {
        j["methods"].push_back({{"name", m.name}, {"rank", m.rank}, {"rate", format_rate(m.rate)}});
    }
    j["equivalence_edges"] = nlohmann::json::array();
    for (const auto& [a, b] : data.equivalence_edges) {
        j["equivalence_edges"].push_back({a, b});
    }
    j["bars"] = data.bars;
    return j.dump(2) + "\n";
}

std::string cd_to_svg(const CdDiagramData& data) {
    const int n = static_cast<int>(data.methods.size());
    const double width = 760.0;
    const double margin = 80.0;
    const double axis_y = 50.0;
    const double span = width - 2.0 * margin;
    auto x_of_rank = [&](double rank) {
        if (n <= 1) return margin;
        return margin + (rank - 1.0) / (static_cast<double>(n) - 1.0) * span;
    };

    std::map<std::string, int> rank_of;
    for (const auto& m : data.methods) rank_of[m.name] = m.rank;

    const double bar_gap = 14.0;
    const double bars_height = bar_gap * static_cast<double>(data.bars.size() + 1);
    const double label_base = axis_y + bars_height + 20.0;
    const double height = label_base + 22.0 * static_cast<double>(n) + 20.0;

    std::string svg;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "font-family=\"sans-serif\" font-size=\"12\">\n",
                  width, height);
    svg += buf;

    // rank axis with ticks
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", margin,
                  axis_y, margin + span, axis_y);
    svg += buf;
    for (int r = 1; r <= n; ++r) {
        double x = x_of_rank(r);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", x,
                      axis_y - 5.0, x, axis_y);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%d</text>\n", x, axis_y - 10.0,
                      r);
        svg += buf;
    }

    // equivalence bars under the axis; singleton cliques draw no bar
    std::size_t bar_row = 0;
    for (const auto& bar : data.bars) {
        if (bar.size() < 2) continue;
        int lo = n;
        int hi = 1;
        for (const auto& name : bar) {
            lo = std::min(lo, rank_of.at(name));
            hi = std::max(hi, rank_of.at(name));
        }
        double y = axis_y + bar_gap * static_cast<double>(++bar_row);
        std::snprintf(
            buf, sizeof(buf),
            "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\" stroke-width=\"4\"/>\n",
            x_of_rank(lo) - 3.0, y, x_of_rank(hi) + 3.0, y);
        svg += buf;
    }

    // one label row per method, stem from its rank position
    for (int i = 0; i < n; ++i) {
        const CdMethod& m = data.methods[static_cast<std::size_t>(i)];
        double x = x_of_rank(m.rank);
        double y = label_base + 22.0 * static_cast<double>(i);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"gray\" "
                      "stroke-dasharray=\"2,2\"/>\n",
                      x, axis_y, x, y);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"start\">%s (%.1f%%)</text>\n", x + 4.0,
                      y + 4.0, m.name.c_str(), m.rate * 100.0);
        svg += buf;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace iacbench::stats
