#ifndef COMMEVAL_DETECT_LOUVAIN_HPP_
#define COMMEVAL_DETECT_LOUVAIN_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {
namespace detail {

/// Weighted graph used for the aggregation phases. self_loop[u] holds twice
/// the internal weight of the community collapsed into u, so weighted
/// degrees match the expanded graph.
struct AggGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;  // (neighbor, weight)
    std::vector<double> self_loop;
    double total_weight = 0.0;  // m equivalent

    std::size_t size() const { return adj.size(); }
};

inline AggGraph agg_from_graph(const Graph& g) {
    AggGraph a;
    a.adj.resize(g.node_count());
    a.self_loop.assign(g.node_count(), 0.0);
    for (const Edge& e : g.edges()) {
        a.adj[e.u].emplace_back(e.v, 1.0);
        a.adj[e.v].emplace_back(e.u, 1.0);
        a.total_weight += 1.0;
    }
    return a;
}

inline double weighted_degree(const AggGraph& a, std::uint32_t u) {
    double d = a.self_loop[u];
    for (auto [v, w] : a.adj[u]) d += w;
    return d;
}

/// Sequential local moving in canonical node order until stable. Returns
/// true if any node changed community. Ties break toward the smaller
/// community id.
inline bool louvain_one_level(const AggGraph& a, std::vector<std::uint32_t>& comm) {
    const std::size_t n = a.size();
    const double m = a.total_weight;
    if (m == 0.0) return false;

    std::vector<double> node_deg(n);
    std::vector<double> comm_tot(n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u) node_deg[u] = weighted_degree(a, u);
    for (std::uint32_t u = 0; u < n; ++u) comm_tot[comm[u]] += node_deg[u];

    bool any_move = false;
    bool improved = true;
    std::vector<double> link_w(n, 0.0);
    std::vector<std::uint32_t> touched;
    while (improved) {
        improved = false;
        for (std::uint32_t u = 0; u < n; ++u) {
            std::uint32_t cu = comm[u];
            touched.clear();
            for (auto [v, w] : a.adj[u]) {
                std::uint32_t cv = comm[v];
                if (link_w[cv] == 0.0 && cv != cu) touched.push_back(cv);
                link_w[cv] += w;
            }
            comm_tot[cu] -= node_deg[u];
            // gain of moving u from cu to c, with u already lifted out of cu
            double best_gain = 0.0;
            std::uint32_t best_comm = cu;
            for (std::uint32_t c : touched) {
                double gain = (link_w[c] - link_w[cu]) / m -
                              node_deg[u] * (comm_tot[c] - comm_tot[cu]) / (2.0 * m * m);
                if (gain > best_gain + 1e-12 ||
                    (gain > 1e-12 && gain > best_gain - 1e-12 && c < best_comm)) {
                    best_gain = gain;
                    best_comm = c;
                }
            }
            comm_tot[cu] += node_deg[u];
            if (best_comm != cu && best_gain > 1e-12) {
                comm_tot[cu] -= node_deg[u];
                comm_tot[best_comm] += node_deg[u];
                comm[u] = best_comm;
                improved = true;
                any_move = true;
            }
            link_w[cu] = 0.0;
            for (std::uint32_t c : touched) link_w[c] = 0.0;
        }
    }
    return any_move;
}

/// Collapse communities into super-nodes. `dense[old_super] = new_super`.
inline AggGraph aggregate(const AggGraph& a, const std::vector<std::uint32_t>& comm,
                          std::vector<std::uint32_t>& dense) {
    const std::size_t n = a.size();
    dense.assign(n, 0);
    std::vector<std::int64_t> remap(n, -1);
    std::uint32_t k = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
        if (remap[comm[u]] < 0) remap[comm[u]] = k++;
        dense[u] = static_cast<std::uint32_t>(remap[comm[u]]);
    }
    AggGraph out;
    out.adj.resize(k);
    out.self_loop.assign(k, 0.0);
    std::vector<std::unordered_map<std::uint32_t, double>> acc(k);
    for (std::uint32_t u = 0; u < n; ++u) {
        std::uint32_t cu = dense[u];
        out.self_loop[cu] += a.self_loop[u];
        for (auto [v, w] : a.adj[u]) {
            std::uint32_t cv = dense[v];
            if (cu == cv)
                out.self_loop[cu] += w;  // internal edges land here twice, as intended
            else
                acc[cu][cv] += w;
        }
    }
    for (std::uint32_t c = 0; c < k; ++c) {
        std::vector<std::pair<std::uint32_t, double>> row(acc[c].begin(), acc[c].end());
        std::sort(row.begin(), row.end());
        out.adj[c] = std::move(row);
    }
    out.total_weight = a.total_weight;
    return out;
}

} // namespace detail

/// Louvain method: local moving + aggregation until no modularity gain.
/// Deterministic under the canonical node order; the seed parameter exists
/// for interface uniformity and is unused.
inline Partition detect_louvain(const Graph& g, std::uint64_t /*seed*/ = 0) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (g.edge_count() == 0) return Partition::singletons(n);

    std::vector<std::uint32_t> flat(n);
    for (std::uint32_t u = 0; u < n; ++u) flat[u] = u;

    detail::AggGraph a = detail::agg_from_graph(g);
    while (true) {
        std::vector<std::uint32_t> comm(a.size());
        for (std::uint32_t u = 0; u < a.size(); ++u) comm[u] = u;
        if (!detail::louvain_one_level(a, comm)) break;
        std::vector<std::uint32_t> dense;
        detail::AggGraph next = detail::aggregate(a, comm, dense);
        for (std::uint32_t u = 0; u < n; ++u) flat[u] = dense[flat[u]];
        if (next.size() == a.size()) break;
        a = std::move(next);
    }
    return Partition::from_assignment(flat);
}

} // namespace commeval

#endif // COMMEVAL_DETECT_LOUVAIN_HPP_
