#ifndef COMMEVAL_METRICS_SIMILARITY_HPP_
#define COMMEVAL_METRICS_SIMILARITY_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/core/errors.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {

/// Intersection-count table between two partitions over the same node set.
struct ContingencyTable {
    std::vector<std::vector<std::uint64_t>> counts;  // k1 x k2
    std::vector<std::uint64_t> row;                  // marginals = p1 sizes
    std::vector<std::uint64_t> col;                  // marginals = p2 sizes
    std::uint64_t n = 0;
};

inline ContingencyTable contingency(const Partition& p1, const Partition& p2) {
    if (p1.node_count() != p2.node_count())
        throw std::invalid_argument("partitions cover different node sets");
    ContingencyTable t;
    t.n = p1.node_count();
    t.counts.assign(p1.community_count(), std::vector<std::uint64_t>(p2.community_count(), 0));
    for (node_t u = 0; u < t.n; ++u) ++t.counts[p1.community_of(u)][p2.community_of(u)];
    t.row.assign(p1.sizes().begin(), p1.sizes().end());
    t.col.assign(p2.sizes().begin(), p2.sizes().end());
    return t;
}

enum class SimMetric { RI, ARI, NMI, VI, SJD };

inline const char* to_string(SimMetric m) {
    switch (m) {
        case SimMetric::RI: return "RI";
        case SimMetric::ARI: return "ARI";
        case SimMetric::NMI: return "NMI";
        case SimMetric::VI: return "VI";
        case SimMetric::SJD: return "SJD";
    }
    return "?";
}

inline SimMetric sim_metric_from_string(const std::string& s) {
    if (s == "RI") return SimMetric::RI;
    if (s == "ARI") return SimMetric::ARI;
    if (s == "NMI") return SimMetric::NMI;
    if (s == "VI") return SimMetric::VI;
    if (s == "SJD") return SimMetric::SJD;
    throw std::invalid_argument("unknown similarity metric: " + s);
}

inline bool is_distance_metric(SimMetric m) { return m == SimMetric::VI || m == SimMetric::SJD; }

struct SimilarityScore {
    SimMetric metric;
    double value = 0.0;       // raw metric value
    double normalized = 0.0;  // VI/ln(n), SJD/(2n); identity for RI, ARI, NMI
    bool degenerate_flag = false;
};

namespace detail {

inline double choose2(std::uint64_t x) {
    return 0.5 * static_cast<double>(x) * static_cast<double>(x ? x - 1 : 0);
}

struct PairCounts {
    double together_both;  // sum_ij C(n_ij, 2)
    double pairs1;         // sum_i C(row_i, 2)
    double pairs2;         // sum_j C(col_j, 2)
    double total;          // C(n, 2)
};

inline PairCounts pair_counts(const ContingencyTable& t) {
    PairCounts pc{0.0, 0.0, 0.0, choose2(t.n)};
    for (const auto& r : t.counts)
        for (std::uint64_t c : r) pc.together_both += choose2(c);
    for (std::uint64_t r : t.row) pc.pairs1 += choose2(r);
    for (std::uint64_t c : t.col) pc.pairs2 += choose2(c);
    return pc;
}

struct EntropyTerms {
    double h1, h2, mutual;  // nats
};

inline EntropyTerms entropies(const ContingencyTable& t) {
    const double n = static_cast<double>(t.n);
    EntropyTerms e{0.0, 0.0, 0.0};
    for (std::uint64_t r : t.row)
        if (r > 0) e.h1 -= (r / n) * std::log(r / n);
    for (std::uint64_t c : t.col)
        if (c > 0) e.h2 -= (c / n) * std::log(c / n);
    for (std::size_t i = 0; i < t.counts.size(); ++i)
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            std::uint64_t nij = t.counts[i][j];
            if (nij == 0) continue;
            e.mutual += (nij / n) *
                        std::log(nij * n / (static_cast<double>(t.row[i]) * static_cast<double>(t.col[j])));
        }
    return e;
}

} // namespace detail

/// Fraction of node pairs both partitions treat the same way.
inline SimilarityScore rand_index(const ContingencyTable& t) {
    if (t.n < 2) throw MetricUndefined("Rand index undefined for fewer than 2 nodes");
    auto pc = detail::pair_counts(t);
    double disagreements = pc.pairs1 + pc.pairs2 - 2.0 * pc.together_both;
    double ri = (pc.total - disagreements) / pc.total;
    return {SimMetric::RI, ri, ri, false};
}

/// Chance-corrected Rand index (pair-counting adjustment).
inline SimilarityScore adjusted_rand(const ContingencyTable& t) {
    if (t.n < 2) throw MetricUndefined("adjusted Rand undefined for fewer than 2 nodes");
    auto pc = detail::pair_counts(t);
    double expected = pc.pairs1 * pc.pairs2 / pc.total;
    double maximum = 0.5 * (pc.pairs1 + pc.pairs2);
    if (maximum == expected) {
        // both partitions all-singletons or both one community
        bool identical = pc.together_both == pc.pairs1 && pc.pairs1 == pc.pairs2;
        double v = identical ? 1.0 : 0.0;
        return {SimMetric::ARI, v, v, true};
    }
    double ari = (pc.together_both - expected) / (maximum - expected);
    return {SimMetric::ARI, ari, ari, false};
}

/// NMI with the sum normalization 2I/(H1+H2); 1.0 when both partitions are
/// trivial (zero entropy on each side).
inline SimilarityScore nmi(const ContingencyTable& t) {
    auto e = detail::entropies(t);
    if (e.h1 == 0.0 && e.h2 == 0.0) return {SimMetric::NMI, 1.0, 1.0, true};
    double v = 2.0 * e.mutual / (e.h1 + e.h2);
    if (v < 0.0 && v > -1e-15) v = 0.0;  // clamp arithmetic noise
    return {SimMetric::NMI, v, v, false};
}

/// Variation of information in nats; normalized by ln(n) for n >= 2.
inline SimilarityScore variation_of_information(const ContingencyTable& t) {
    auto e = detail::entropies(t);
    double vi = e.h1 + e.h2 - 2.0 * e.mutual;
    if (vi < 0.0) vi = 0.0;
    double norm = t.n >= 2 ? vi / std::log(static_cast<double>(t.n)) : 0.0;
    return {SimMetric::VI, vi, norm, false};
}

/// van Dongen split-join distance d(p1->p2) + d(p2->p1); normalized by 2n.
inline SimilarityScore split_join(const ContingencyTable& t) {
    std::uint64_t best1 = 0, best2 = 0;
    for (const auto& r : t.counts) {
        std::uint64_t m = 0;
        for (std::uint64_t c : r) m = std::max(m, c);
        best1 += m;
    }
    for (std::size_t j = 0; j < t.col.size(); ++j) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < t.counts.size(); ++i) m = std::max(m, t.counts[i][j]);
        best2 += m;
    }
    double sjd = static_cast<double>(2 * t.n - best1 - best2);
    double norm = t.n > 0 ? sjd / (2.0 * static_cast<double>(t.n)) : 0.0;
    return {SimMetric::SJD, sjd, norm, false};
}

inline SimilarityScore similarity(SimMetric m, const ContingencyTable& t) {
    switch (m) {
        case SimMetric::RI: return rand_index(t);
        case SimMetric::ARI: return adjusted_rand(t);
        case SimMetric::NMI: return nmi(t);
        case SimMetric::VI: return variation_of_information(t);
        case SimMetric::SJD: return split_join(t);
    }
    throw std::logic_error("unreachable");
}

inline SimilarityScore similarity(SimMetric m, const Partition& p1, const Partition& p2) {
    return similarity(m, contingency(p1, p2));
}

/// Orientation used by the evidence, multilayer and decision layers: higher
/// is better, in [0,1]. Distances flip (1 - normalized); ARI maps via
/// (x+1)/2 so chance level sits at 0.5.
inline double oriented_similarity(SimMetric m, double normalized) {
    if (is_distance_metric(m)) return 1.0 - normalized;
    if (m == SimMetric::ARI) return (normalized + 1.0) / 2.0;
    return normalized;
}

} // namespace commeval

#endif // COMMEVAL_METRICS_SIMILARITY_HPP_
