#ifndef COMMEVAL_METRICS_STRUCTURAL_HPP_
#define COMMEVAL_METRICS_STRUCTURAL_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "commeval/core/errors.hpp"
#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {

namespace detail {

struct CommunityTallies {
    std::vector<std::uint64_t> internal_edges;  // l_c
    std::vector<std::uint64_t> total_degree;    // d_c = 2*l_c + cut_c
    std::uint64_t m = 0;
};

inline CommunityTallies tally(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        throw std::invalid_argument("partition does not cover the graph");
    CommunityTallies t;
    t.internal_edges.assign(p.community_count(), 0);
    t.total_degree.assign(p.community_count(), 0);
    t.m = g.edge_count();
    for (const Edge& e : g.edges()) {
        std::uint32_t cu = p.community_of(e.u), cv = p.community_of(e.v);
        ++t.total_degree[cu];
        ++t.total_degree[cv];
        if (cu == cv) ++t.internal_edges[cu];
    }
    return t;
}

} // namespace detail

/// Newman-Girvan modularity, unweighted (recurrence counts are ignored):
/// Q = sum_c [ l_c/m - (d_c/2m)^2 ].
inline double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0)
        throw MetricUndefined("modularity undefined on an edgeless graph");
    auto t = detail::tally(g, p);
    const double m = static_cast<double>(t.m);
    double q = 0.0;
    for (std::uint32_t c = 0; c < p.community_count(); ++c) {
        double frac = static_cast<double>(t.total_degree[c]) / (2.0 * m);
        q += static_cast<double>(t.internal_edges[c]) / m - frac * frac;
    }
    return q;
}

struct ConductanceResult {
    std::vector<double> per_community;  // phi(c) = cut(c)/min(vol(c), vol(rest))
    double mean = 0.0;
    double max = 0.0;
    bool zero_volume_flag = false;  // a zero-volume side was reported as 0
};

inline ConductanceResult conductance(const Graph& g, const Partition& p) {
    auto t = detail::tally(g, p);
    ConductanceResult r;
    r.per_community.resize(p.community_count());
    const std::uint64_t total_vol = 2 * t.m;
    for (std::uint32_t c = 0; c < p.community_count(); ++c) {
        std::uint64_t cut = t.total_degree[c] - 2 * t.internal_edges[c];
        std::uint64_t vol = t.total_degree[c];
        std::uint64_t vol_rest = total_vol - vol;
        std::uint64_t denom = std::min(vol, vol_rest);
        double phi = 0.0;
        if (vol_rest == 0 || denom == 0) {
            r.zero_volume_flag = true;  // empty complement side; reported as 0
        } else if (cut > 0) {
            phi = static_cast<double>(cut) / static_cast<double>(denom);
        }
        r.per_community[c] = phi;
        r.mean += phi;
        r.max = std::max(r.max, phi);
    }
    if (!r.per_community.empty()) r.mean /= static_cast<double>(r.per_community.size());
    return r;
}

/// Fraction of edges internal to communities.
inline double coverage(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0)
        throw MetricUndefined("coverage undefined on an edgeless graph");
    auto t = detail::tally(g, p);
    std::uint64_t internal = 0;
    for (std::uint64_t l : t.internal_edges) internal += l;
    return static_cast<double>(internal) / static_cast<double>(t.m);
}

struct InternalDensityResult {
    std::vector<double> per_community;  // 2*l_c / (s*(s-1)); singletons are 1.0
    double mean = 0.0;
    bool singleton_flag = false;
};

inline InternalDensityResult internal_density(const Graph& g, const Partition& p) {
    auto t = detail::tally(g, p);
    InternalDensityResult r;
    r.per_community.resize(p.community_count());
    for (std::uint32_t c = 0; c < p.community_count(); ++c) {
        std::uint64_t s = p.sizes()[c];
        double d;
        if (s <= 1) {
            d = 1.0;
            r.singleton_flag = true;
        } else {
            d = 2.0 * static_cast<double>(t.internal_edges[c]) /
                (static_cast<double>(s) * static_cast<double>(s - 1));
        }
        r.per_community[c] = d;
        r.mean += d;
    }
    if (!r.per_community.empty()) r.mean /= static_cast<double>(r.per_community.size());
    return r;
}

struct PartitionStats {
    std::uint32_t k = 0;
    double size_cv = 0.0;             // population std / mean of community sizes
    double singleton_fraction = 0.0;  // fraction of communities of size 1
    std::map<std::uint32_t, std::uint32_t> size_histogram;
};

inline PartitionStats partition_stats(const Partition& p) {
    PartitionStats s;
    s.k = p.community_count();
    if (s.k == 0) return s;
    double mean = 0.0;
    std::uint32_t singles = 0;
    for (std::uint32_t sz : p.sizes()) {
        mean += sz;
        ++s.size_histogram[sz];
        if (sz == 1) ++singles;
    }
    mean /= s.k;
    double var = 0.0;
    for (std::uint32_t sz : p.sizes()) var += (sz - mean) * (sz - mean);
    var /= s.k;
    s.size_cv = s.k > 1 ? std::sqrt(var) / mean : 0.0;
    s.singleton_fraction = static_cast<double>(singles) / static_cast<double>(s.k);
    return s;
}

/// Structural evidence bundle for one (graph, partition) pair.
struct StructuralScores {
    double modularity = 0.0;
    std::vector<double> conductance_per_community;
    double conductance_mean = 0.0;
    double conductance_max = 0.0;
    bool conductance_flag = false;
    double coverage = 0.0;
    double internal_density_mean = 0.0;
    bool density_singleton_flag = false;
    std::uint32_t k = 0;
    double size_cv = 0.0;
    double singleton_fraction = 0.0;
};

inline StructuralScores structural_scores(const Graph& g, const Partition& p) {
    StructuralScores s;
    s.modularity = modularity(g, p);
    auto c = conductance(g, p);
    s.conductance_per_community = std::move(c.per_community);
    s.conductance_mean = c.mean;
    s.conductance_max = c.max;
    s.conductance_flag = c.zero_volume_flag;
    s.coverage = coverage(g, p);
    auto d = internal_density(g, p);
    s.internal_density_mean = d.mean;
    s.density_singleton_flag = d.singleton_flag;
    auto ps = partition_stats(p);
    s.k = ps.k;
    s.size_cv = ps.size_cv;
    s.singleton_fraction = ps.singleton_fraction;
    return s;
}

} // namespace commeval

#endif // COMMEVAL_METRICS_STRUCTURAL_HPP_
