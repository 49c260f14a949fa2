#ifndef COMMEVAL_DETECT_LABEL_PROPAGATION_HPP_
#define COMMEVAL_DETECT_LABEL_PROPAGATION_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"
#include "commeval/core/rng.hpp"

namespace commeval {

/// Asynchronous label propagation. Each sweep visits nodes in a fresh
/// seeded-random order and adopts the majority label among neighbors,
/// breaking ties by a seeded-random choice among the tied labels. Stops when
/// a full sweep changes nothing (bounded by a sweep cap to rule out
/// label oscillation on pathological inputs).
inline Partition detect_label_propagation(const Graph& g, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    Rng rng(seed);

    std::vector<std::uint32_t> label(n);
    for (std::uint32_t u = 0; u < n; ++u) label[u] = u;

    std::vector<node_t> order(n);
    for (std::uint32_t u = 0; u < n; ++u) order[u] = u;

    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint32_t> touched, tied;

    const int max_sweeps = 200;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        rng.shuffle(order);
        bool changed = false;
        for (node_t u : order) {
            auto nb = g.neighbors(u);
            if (nb.empty()) continue;
            touched.clear();
            std::uint32_t best = 0;
            for (node_t v : nb) {
                std::uint32_t l = label[v];
                if (count[l] == 0) touched.push_back(l);
                best = std::max(best, ++count[l]);
            }
            tied.clear();
            for (std::uint32_t l : touched)
                if (count[l] == best) tied.push_back(l);
            std::uint32_t pick;
            if (tied.size() == 1) {
                pick = tied[0];
            } else {
                // keep the current label when it is among the winners,
                // otherwise pick one of the tied labels at random
                bool current_tied = count[label[u]] == best;
                pick = current_tied ? label[u]
                                    : tied[rng.next_below(tied.size())];
            }
            for (std::uint32_t l : touched) count[l] = 0;
            if (pick != label[u]) {
                label[u] = pick;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return Partition::from_assignment(label);
}

} // namespace commeval

#endif // COMMEVAL_DETECT_LABEL_PROPAGATION_HPP_
