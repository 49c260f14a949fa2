#ifndef COMMEVAL_BENCH_PLANTED_HPP_
#define COMMEVAL_BENCH_PLANTED_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"
#include "commeval/core/rng.hpp"

namespace commeval {

/// Planted-partition generator with bias injectors. Planted edges carry
/// recurrence 3 (recurrent interactions); injected sporadic edges carry
/// recurrence 1, so a recurrence-2 edge filter removes exactly the
/// injected set.
struct PlantedSpec {
    std::uint32_t blocks = 4;                       // k
    std::uint32_t block_size = 32;
    double p_in = 0.3;
    double p_out = 0.01;
    std::uint64_t seed = 0;
    // injectors
    std::optional<double> sporadic_fraction;        // f of the planted edge count
    std::optional<std::uint32_t> roamer_count;      // nodes wired across blocks
    std::optional<std::uint32_t> micro_components;  // disjoint 3-cliques
};

struct PlantedNetwork {
    Graph graph;
    GroundTruth ground_truth;
    std::vector<std::pair<std::string, std::string>> injected_sporadic;  // by node name
    std::vector<std::string> warnings;
};

/// Deterministic for a fixed spec+seed. Block nodes are named "0".."n-1"
/// and labeled "block<j>"; roamers are labeled "roamer"; micro-component
/// nodes share the label "micro". Sporadic edges model correlated noise:
/// they concentrate between the first two blocks rather than spreading
/// uniformly, so the injection visibly disturbs detection.
inline PlantedNetwork generate_planted(const PlantedSpec& spec) {
    if (spec.blocks < 1 || spec.block_size < 1)
        throw std::invalid_argument("need at least one block and one node per block");
    if (spec.p_in < 0 || spec.p_in > 1 || spec.p_out < 0 || spec.p_out > 1)
        throw std::invalid_argument("edge probabilities must be in [0,1]");
    if (spec.sporadic_fraction && (*spec.sporadic_fraction < 0 || *spec.sporadic_fraction > 1))
        throw std::invalid_argument("sporadic fraction must be in [0,1]");
    if (spec.sporadic_fraction && spec.blocks < 2)
        throw std::invalid_argument("sporadic injection needs at least two blocks");

    PlantedNetwork out;
    if (spec.p_in <= spec.p_out)
        out.warnings.push_back("p_in <= p_out: no plantable community structure");

    Rng rng(splitmix64(spec.seed));
    const std::uint32_t n = spec.blocks * spec.block_size;
    GraphBuilder b;
    std::vector<std::string> label(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        b.add_node(std::to_string(u));
        label[u] = "block" + std::to_string(u / spec.block_size);
    }

    std::size_t planted_edges = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            double p = (i / spec.block_size == j / spec.block_size) ? spec.p_in : spec.p_out;
            if (rng.next_double() < p) {
                b.add_edge(i, j, 3);
                ++planted_edges;
            }
        }
    }

    // roamers: extra nodes wired uniformly across all blocks
    std::vector<std::uint32_t> roamers;
    if (spec.roamer_count && *spec.roamer_count > 0) {
        double mean_deg = n > 0 ? 2.0 * static_cast<double>(planted_edges) / n : 0.0;
        std::uint32_t wanted = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::lround(mean_deg)));
        wanted = std::min(wanted, n);
        for (std::uint32_t r = 0; r < *spec.roamer_count; ++r) {
            std::uint32_t id = b.add_node("roamer" + std::to_string(r));
            roamers.push_back(id);
            label.push_back("roamer");
            // sample `wanted` distinct targets among block nodes
            std::vector<std::uint32_t> targets;
            while (targets.size() < wanted) {
                std::uint32_t t = static_cast<std::uint32_t>(rng.next_below(n));
                if (std::find(targets.begin(), targets.end(), t) == targets.end())
                    targets.push_back(t);
            }
            for (std::uint32_t t : targets) b.add_edge(id, t, 3);
        }
    }

    // micro components: disjoint 3-cliques sharing one ground-truth class
    if (spec.micro_components && *spec.micro_components > 0) {
        for (std::uint32_t q = 0; q < *spec.micro_components; ++q) {
            std::uint32_t a = b.add_node("micro" + std::to_string(q) + "a");
            std::uint32_t bb = b.add_node("micro" + std::to_string(q) + "b");
            std::uint32_t c = b.add_node("micro" + std::to_string(q) + "c");
            label.push_back("micro");
            label.push_back("micro");
            label.push_back("micro");
            b.add_edge(a, bb, 3);
            b.add_edge(bb, c, 3);
            b.add_edge(a, c, 3);
        }
    }

    // sporadic inter-block edges, recurrence 1, concentrated between the
    // first two blocks; sampled from non-adjacent cross pairs
    if (spec.sporadic_fraction && *spec.sporadic_fraction > 0.0) {
        std::size_t want = static_cast<std::size_t>(
            std::llround(*spec.sporadic_fraction * static_cast<double>(planted_edges)));
        Graph snapshot = b.build();
        std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
        for (std::uint32_t i = 0; i < spec.block_size; ++i)
            for (std::uint32_t j = spec.block_size; j < 2 * spec.block_size; ++j)
                if (!snapshot.has_edge(i, j)) candidates.emplace_back(i, j);
        if (candidates.size() < want)
            throw std::invalid_argument(
                "sporadic fraction too large: only " + std::to_string(candidates.size()) +
                " free cross pairs between the first two blocks");
        // partial Fisher-Yates: first `want` entries form the sample
        for (std::size_t i = 0; i < want; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.next_below(candidates.size() - i));
            std::swap(candidates[i], candidates[j]);
        }
        for (std::size_t i = 0; i < want; ++i) {
            auto [u, v] = candidates[i];
            b.add_edge(u, v, 1);
            out.injected_sporadic.emplace_back(std::to_string(u), std::to_string(v));
        }
    }

    for (std::uint32_t u = 0; u < label.size(); ++u) b.set_label(u, label[u]);
    out.graph = b.build();

    // ground truth from labels
    std::vector<std::uint32_t> assign(label.size());
    std::vector<std::string> class_names;
    for (std::size_t u = 0; u < label.size(); ++u) {
        auto it = std::find(class_names.begin(), class_names.end(), label[u]);
        if (it == class_names.end()) {
            assign[u] = static_cast<std::uint32_t>(class_names.size());
            class_names.push_back(label[u]);
        } else {
            assign[u] = static_cast<std::uint32_t>(it - class_names.begin());
        }
    }
    out.ground_truth.partition = Partition::from_assignment(assign);
    std::vector<std::string> aligned(out.ground_truth.partition.community_count());
    for (std::size_t u = 0; u < label.size(); ++u)
        aligned[out.ground_truth.partition.community_of(static_cast<node_t>(u))] = label[u];
    out.ground_truth.class_names = std::move(aligned);
    return out;
}

} // namespace commeval

#endif // COMMEVAL_BENCH_PLANTED_HPP_
