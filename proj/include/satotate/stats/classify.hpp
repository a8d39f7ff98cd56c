#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/numeric.hpp"
#include "satotate/stats/accumulator.hpp"
#include "satotate/stgroups/catalog.hpp"

namespace satotate::stats {

struct ClassificationEntry {
    std::string name;
    double score;
};

struct ClassificationReport {
    /// Ascending by score: best match first.
    std::vector<ClassificationEntry> ranking;
    std::string metric;
    std::vector<unsigned> orders;

    [[nodiscard]] const ClassificationEntry& best() const { return ranking.at(0); }
};

/// Below this many samples moment comparisons are not meaningful.
inline constexpr std::uint64_t kMinClassifySamples = 1000;

/// Distance between empirical and catalog statistics:
///   max_{n even, n <= 10} |M_n^emp - M_n^cat| / (1 + M_n^cat)
/// plus |zero^emp - zero^cat| when the catalog group has a zero-trace atom.
inline double classification_score(const TraceAccumulator& acc, const stgroups::CatalogGroup& G) {
    const auto emp = acc.moments(TraceAccumulator::kMaxPower);
    double score = 0.0;
    for (unsigned n = 2; n <= TraceAccumulator::kMaxPower; n += 2) {
        const double cat = to_double(G.moments[n]);
        score = std::max(score, std::abs(emp[n] - cat) / (1.0 + cat));
    }
    const double zero = to_double(G.spec.metadata().zero_trace_density);
    if (zero > 0.0) score += std::abs(acc.zero_density() - zero);
    return score;
}

/// Ranks candidate catalog groups by classification_score, best first.
inline ClassificationReport classify(const TraceAccumulator& acc, const std::vector<std::string>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("classify: no candidate groups");
    if (acc.count() < kMinClassifySamples) {
        throw std::invalid_argument("classify: need at least 1000 samples, have " + std::to_string(acc.count()));
    }
    ClassificationReport report;
    report.metric = "max_{n even <= 10} |M_n^emp - M_n^cat| / (1 + M_n^cat) + |zero^emp - zero^cat| [atom only]";
    for (unsigned n = 2; n <= TraceAccumulator::kMaxPower; n += 2) report.orders.push_back(n);
    for (const auto& name : candidates) {
        const auto G = stgroups::catalog_group(name);
        if (G.spec.genus() != acc.genus()) {
            throw std::invalid_argument("classify: " + name + " has genus " + std::to_string(G.spec.genus()) +
                                        " but the data has genus " + std::to_string(acc.genus()));
        }
        report.ranking.push_back({name, classification_score(acc, G)});
    }
    std::stable_sort(report.ranking.begin(), report.ranking.end(),
                     [](const auto& a, const auto& b) { return a.score < b.score; });
    return report;
}

/// Catalog names of the given genus, in catalog order.
inline std::vector<std::string> candidates_for_genus(unsigned genus) {
    std::vector<std::string> out;
    for (const auto& name : stgroups::catalog_names()) {
        if (stgroups::catalog_spec(name).genus() == genus) out.push_back(name);
    }
    return out;
}

}  // namespace satotate::stats
