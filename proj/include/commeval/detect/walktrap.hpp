#ifndef COMMEVAL_DETECT_WALKTRAP_HPP_
#define COMMEVAL_DETECT_WALKTRAP_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"
#include "commeval/core/rng.hpp"
#include "commeval/metrics/structural.hpp"

namespace commeval {

struct WalktrapOptions {
    int walk_length = 4;  // t
};

/// Random-walk agglomeration: communities whose t-step transition
/// probability profiles are closest (Ward-style variance criterion) merge
/// first; only adjacent communities may merge, and the merge sequence is cut
/// at the level of maximum modularity. Randomness enters only through
/// seeded tie-breaking among equal merge candidates.
inline Partition detect_walktrap(const Graph& g, std::uint64_t seed,
                                 const WalktrapOptions& opts = {}) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (g.edge_count() == 0) return Partition::singletons(n);

    Rng rng(seed);

    // exact t-step transition probability vectors, one per node
    std::vector<std::vector<double>> prob(n, std::vector<double>(n, 0.0));
    {
        std::vector<double> cur(n), next(n);
        for (node_t s = 0; s < n; ++s) {
            std::fill(cur.begin(), cur.end(), 0.0);
            cur[s] = 1.0;
            for (int step = 0; step < opts.walk_length; ++step) {
                std::fill(next.begin(), next.end(), 0.0);
                for (node_t u = 0; u < n; ++u) {
                    if (cur[u] == 0.0) continue;
                    double share = cur[u] / static_cast<double>(g.degree(u) ? g.degree(u) : 1);
                    if (g.degree(u) == 0) {
                        next[u] += cur[u];  // isolated node stays put
                        continue;
                    }
                    for (node_t v : g.neighbors(u)) next[v] += share;
                }
                cur.swap(next);
            }
            prob[s] = cur;
        }
    }

    std::vector<double> inv_deg(n);
    for (node_t u = 0; u < n; ++u)
        inv_deg[u] = g.degree(u) > 0 ? 1.0 / static_cast<double>(g.degree(u)) : 0.0;

    // community state
    std::vector<std::int32_t> comm_of(n);
    std::vector<std::vector<double>> comm_prob;   // mean member profile
    std::vector<std::uint32_t> comm_size;
    std::vector<std::set<std::uint32_t>> comm_adj;  // adjacent communities
    for (node_t u = 0; u < n; ++u) {
        comm_of[u] = static_cast<std::int32_t>(u);
        comm_prob.push_back(prob[u]);
        comm_size.push_back(1);
        comm_adj.emplace_back();
    }
    for (const Edge& e : g.edges()) {
        comm_adj[e.u].insert(e.v);
        comm_adj[e.v].insert(e.u);
    }

    auto ward_delta = [&](std::uint32_t a, std::uint32_t b) {
        double r2 = 0.0;
        const auto& pa = comm_prob[a];
        const auto& pb = comm_prob[b];
        for (node_t k = 0; k < n; ++k) {
            double d = pa[k] - pb[k];
            r2 += d * d * inv_deg[k];
        }
        double sa = comm_size[a], sb = comm_size[b];
        return sa * sb / (sa + sb) * r2 / static_cast<double>(n);
    };

    // merge sequence, evaluated against modularity after every merge
    std::vector<std::uint32_t> best_assign(n), cur_assign(n);
    for (node_t u = 0; u < n; ++u) cur_assign[u] = static_cast<std::uint32_t>(u);
    best_assign = cur_assign;
    double best_q = modularity(g, Partition::from_assignment(cur_assign));

    std::vector<bool> alive(n, true);
    std::size_t alive_count = n;
    while (alive_count > 1) {
        double best_delta = std::numeric_limits<double>::infinity();
        std::uint64_t best_tie = 0;
        std::int64_t ma = -1, mb = -1;
        for (std::uint32_t a = 0; a < comm_adj.size(); ++a) {
            if (!alive[a]) continue;
            for (std::uint32_t b : comm_adj[a]) {
                if (b <= a || !alive[b]) continue;
                double d = ward_delta(a, b);
                if (d < best_delta - 1e-15) {
                    best_delta = d;
                    ma = a;
                    mb = b;
                    best_tie = rng.next_u64();
                } else if (d < best_delta + 1e-15) {
                    std::uint64_t t = rng.next_u64();
                    if (t > best_tie) {
                        best_tie = t;
                        ma = a;
                        mb = b;
                    }
                }
            }
        }
        if (ma < 0) break;  // only non-adjacent (disconnected) communities left

        auto a = static_cast<std::uint32_t>(ma);
        auto b = static_cast<std::uint32_t>(mb);
        // merged profile = size-weighted mean
        double sa = comm_size[a], sb = comm_size[b];
        for (node_t k = 0; k < n; ++k)
            comm_prob[a][k] = (sa * comm_prob[a][k] + sb * comm_prob[b][k]) / (sa + sb);
        comm_size[a] += comm_size[b];
        alive[b] = false;
        --alive_count;
        for (std::uint32_t x : comm_adj[b]) {
            if (x == a) continue;
            comm_adj[x].erase(b);
            if (alive[x]) {
                comm_adj[x].insert(a);
                comm_adj[a].insert(x);
            }
        }
        comm_adj[a].erase(b);
        comm_adj[b].clear();

        for (node_t u = 0; u < n; ++u)
            if (cur_assign[u] == b) cur_assign[u] = a;
        double q = modularity(g, Partition::from_assignment(cur_assign));
        if (q > best_q + 1e-12) {
            best_q = q;
            best_assign = cur_assign;
        }
    }
    return Partition::from_assignment(best_assign);
}

} // namespace commeval

#endif // COMMEVAL_DETECT_WALKTRAP_HPP_
