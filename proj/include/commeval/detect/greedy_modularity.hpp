#ifndef COMMEVAL_DETECT_GREEDY_MODULARITY_HPP_
#define COMMEVAL_DETECT_GREEDY_MODULARITY_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {

/// Agglomerative modularity maximization: start from singletons, repeatedly
/// merge the community pair with the largest positive modularity gain, stop
/// when no merge improves. Deterministic; ties break toward the smaller
/// (a, b) pair. The seed parameter is unused.
inline Partition detect_greedy_modularity(const Graph& g, std::uint64_t /*seed*/ = 0) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    const double m = static_cast<double>(g.edge_count());
    if (m == 0.0) return Partition::singletons(n);

    std::vector<std::uint32_t> comm(n);
    for (std::uint32_t u = 0; u < n; ++u) comm[u] = u;

    // inter-community edge counts and community degrees
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> between;
    std::vector<double> deg(n, 0.0);
    for (const Edge& e : g.edges()) {
        deg[e.u] += 1.0;
        deg[e.v] += 1.0;
        between[{e.u, e.v}] += 1.0;
    }

    auto merge_gain = [&](double l_ab, double da, double db) {
        return l_ab / m - da * db / (2.0 * m * m);
    };

    while (true) {
        double best = 0.0;
        std::pair<std::uint32_t, std::uint32_t> best_pair{0, 0};
        bool found = false;
        for (const auto& [pair, l_ab] : between) {
            double gain = merge_gain(l_ab, deg[pair.first], deg[pair.second]);
            if (gain > best + 1e-12 || (!found && gain > 1e-12)) {
                best = gain;
                best_pair = pair;
                found = true;
            }
        }
        if (!found || best <= 1e-12) break;

        auto [a, b] = best_pair;  // a < b; absorb b into a
        deg[a] += deg[b];
        for (std::uint32_t u = 0; u < n; ++u)
            if (comm[u] == b) comm[u] = a;

        // rewire b's inter-community counts onto a
        std::vector<std::pair<std::uint32_t, double>> moved;
        for (auto it = between.begin(); it != between.end();) {
            auto [x, y] = it->first;
            if (x == b || y == b) {
                std::uint32_t other = x == b ? y : x;
                if (other != a) moved.emplace_back(other, it->second);
                it = between.erase(it);
            } else {
                ++it;
            }
        }
        for (auto [other, w] : moved) {
            auto key = std::minmax(a, other);
            between[{key.first, key.second}] += w;
        }
    }
    return Partition::from_assignment(comm);
}

} // namespace commeval

#endif // COMMEVAL_DETECT_GREEDY_MODULARITY_HPP_
