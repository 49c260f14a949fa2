#ifndef COMMEVAL_DETECT_GIRVAN_NEWMAN_HPP_
#define COMMEVAL_DETECT_GIRVAN_NEWMAN_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "commeval/core/errors.hpp"
#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"
#include "commeval/metrics/structural.hpp"

namespace commeval {
namespace detail {

/// Mutable adjacency used during edge removal.
struct AliveGraph {
    std::vector<std::vector<node_t>> adj;

    explicit AliveGraph(const Graph& g) : adj(g.node_count()) {
        for (const Edge& e : g.edges()) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }

    void remove_edge(node_t u, node_t v) {
        std::erase(adj[u], v);
        std::erase(adj[v], u);
    }
};

/// Brandes accumulation of edge betweenness, restricted to the given nodes
/// (one connected component). Unweighted shortest paths.
inline void edge_betweenness_component(
    const AliveGraph& g, const std::vector<node_t>& nodes,
    std::map<std::pair<node_t, node_t>, double>& score) {
    for (node_t u : nodes)
        for (node_t v : g.adj[u])
            if (u < v) score[{u, v}] = 0.0;

    std::vector<double> sigma(g.adj.size(), 0.0), delta(g.adj.size(), 0.0);
    std::vector<int> dist(g.adj.size(), -1);
    std::vector<std::vector<node_t>> preds(g.adj.size());
    std::vector<node_t> order;
    order.reserve(nodes.size());
    std::deque<node_t> queue;

    for (node_t s : nodes) {
        order.clear();
        for (node_t u : nodes) {
            sigma[u] = 0.0;
            delta[u] = 0.0;
            dist[u] = -1;
            preds[u].clear();
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            node_t v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (node_t w : g.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            node_t w = *it;
            for (node_t v : preds[w]) {
                double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                auto key = std::minmax(v, w);
                score[{key.first, key.second}] += c;
                delta[v] += c;
            }
        }
    }
    // each unordered pair (s, t) contributes twice
    for (node_t u : nodes)
        for (node_t v : g.adj[u])
            if (u < v) score[{u, v}] /= 2.0;
}

inline std::vector<std::vector<node_t>> alive_components(const AliveGraph& g,
                                                         const std::vector<node_t>& within) {
    std::vector<std::vector<node_t>> comps;
    std::vector<bool> seen(g.adj.size(), true);
    for (node_t u : within) seen[u] = false;
    std::vector<node_t> stack;
    for (node_t s : within) {
        if (seen[s]) continue;
        std::vector<node_t> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (node_t v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace detail

struct GirvanNewmanOptions {
    std::size_t slow_edge_limit = 5000;
    bool allow_slow = false;
};

/// Divisive algorithm: repeatedly remove the edge with the largest exact
/// betweenness (recomputed after every removal, restricted to the affected
/// component) and cut the resulting dendrogram at the level of maximum
/// modularity. Deterministic; betweenness ties break toward the smallest
/// (u, v). Cost is O(m^2 n), so graphs above `slow_edge_limit` edges are
/// refused unless allow_slow is set.
inline Partition detect_girvan_newman(const Graph& g, std::uint64_t /*seed*/ = 0,
                                      const GirvanNewmanOptions& opts = {}) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (g.edge_count() > opts.slow_edge_limit && !opts.allow_slow)
        throw ProtocolError("graph has " + std::to_string(g.edge_count()) +
                            " edges; edge-removal detection above " +
                            std::to_string(opts.slow_edge_limit) +
                            " edges requires allow_slow");
    if (g.edge_count() == 0) return Partition::singletons(n);

    detail::AliveGraph alive(g);

    // current communities = connected components, tracked as assignments
    std::vector<std::uint32_t> comp_of(n, 0);
    auto initial = components(g);
    for (std::uint32_t c = 0; c < initial.size(); ++c)
        for (node_t u : initial[c]) comp_of[u] = c;
    std::uint32_t next_comp = static_cast<std::uint32_t>(initial.size());

    std::map<std::pair<node_t, node_t>, double> betweenness;
    for (const auto& comp : initial)
        detail::edge_betweenness_component(alive, comp, betweenness);

    Partition best = Partition::from_assignment(comp_of);
    double best_q = modularity(g, best);

    std::size_t remaining = g.edge_count();
    while (remaining > 0) {
        auto best_it = betweenness.begin();
        for (auto it = betweenness.begin(); it != betweenness.end(); ++it)
            if (it->second > best_it->second + 1e-9) best_it = it;
        auto [u, v] = best_it->first;

        alive.remove_edge(u, v);
        --remaining;

        // recompute betweenness inside the touched component(s)
        std::vector<node_t> affected;
        std::uint32_t cid = comp_of[u];
        for (node_t x = 0; x < n; ++x)
            if (comp_of[x] == cid) affected.push_back(x);
        for (node_t x : affected)
            for (node_t y : alive.adj[x])
                if (x < y) betweenness.erase({x, y});
        betweenness.erase({u, v});

        auto comps = detail::alive_components(alive, affected);
        if (comps.size() > 1) {
            // the component split: relabel and evaluate this dendrogram level
            for (std::size_t i = 1; i < comps.size(); ++i) {
                for (node_t x : comps[i]) comp_of[x] = next_comp;
                ++next_comp;
            }
            Partition p = Partition::from_assignment(comp_of);
            double q = modularity(g, p);
            if (q > best_q + 1e-12) {
                best_q = q;
                best = std::move(p);
            }
        }
        for (const auto& comp : comps)
            detail::edge_betweenness_component(alive, comp, betweenness);
    }
    return best;
}

} // namespace commeval

#endif // COMMEVAL_DETECT_GIRVAN_NEWMAN_HPP_
