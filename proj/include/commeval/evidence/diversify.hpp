#ifndef COMMEVAL_EVIDENCE_DIVERSIFY_HPP_
#define COMMEVAL_EVIDENCE_DIVERSIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/evidence/evidence.hpp"
#include "commeval/metrics/pairwise.hpp"
#include "commeval/metrics/similarity.hpp"

namespace commeval {

/// One layer of the detector-similarity network: a complete weighted graph
/// over detectors, weights in [0,1] with unit diagonal, higher = more alike.
struct SimilarityLayer {
    std::string metric;
    std::vector<std::vector<double>> weight;
};

struct MultilayerNetwork {
    std::vector<std::string> detectors;
    std::vector<SimilarityLayer> layers;
};

/// Metric pairs considered statistically redundant; their mutual agreement
/// is reported but excluded from reinforcement scoring.
inline const std::vector<std::pair<std::string, std::string>>& correlated_metric_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {{"RI", "ARI"}};
    return pairs;
}

inline bool metrics_correlated(const std::string& a, const std::string& b) {
    for (const auto& [x, y] : correlated_metric_pairs())
        if ((a == x && b == y) || (a == y && b == x)) return true;
    return false;
}

/// Similarity layers come from the pairwise matrices with distances flipped
/// into similarities; structural layers weight detector pairs by
/// 1 - score_distance of their per-detector median scores.
inline MultilayerNetwork build_multilayer(
    const std::vector<PairwiseMatrix>& similarity_matrices,
    const std::vector<std::pair<std::string, std::vector<double>>>& structural_scores = {}) {
    if (similarity_matrices.empty())
        throw std::invalid_argument("multilayer network needs at least one similarity matrix");
    MultilayerNetwork net;
    net.detectors = similarity_matrices.front().detectors;
    if (net.detectors.size() < 2)
        throw std::invalid_argument("multilayer network needs at least two detectors");
    const std::size_t d = net.detectors.size();
    for (const auto& pm : similarity_matrices) {
        if (pm.detectors != net.detectors)
            throw std::invalid_argument("pairwise matrices cover different detector sets");
        SimilarityLayer layer;
        layer.metric = to_string(pm.metric);
        layer.weight.assign(d, std::vector<double>(d, 1.0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                layer.weight[i][j] =
                    i == j ? 1.0 : oriented_similarity(pm.metric, pm.value[i][j]);
        net.layers.push_back(std::move(layer));
    }
    for (const auto& [metric, scores] : structural_scores) {
        if (scores.size() != d)
            throw std::invalid_argument("structural score vector does not match detector set");
        SimilarityLayer layer;
        layer.metric = metric;
        layer.weight.assign(d, std::vector<double>(d, 1.0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                double si = std::max(0.0, scores[i]);
                double sj = std::max(0.0, scores[j]);
                layer.weight[i][j] = 1.0 - score_distance(si, sj);
            }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

enum class LayerClusteringMethod { MedianThreshold, AverageLinkage };

struct LayerClustering {
    std::string metric;
    Partition groups;  // over detector indices
    double threshold = 0.0;
};

namespace detail {

inline Partition components_of_kept_edges(std::size_t d,
                                          const std::vector<std::vector<double>>& weight,
                                          double tau) {
    std::vector<std::uint32_t> comp(d);
    for (std::size_t i = 0; i < d; ++i) comp[i] = static_cast<std::uint32_t>(i);
    // union-find, path halving
    std::vector<std::uint32_t> parent(d);
    for (std::size_t i = 0; i < d; ++i) parent[i] = static_cast<std::uint32_t>(i);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (weight[i][j] >= tau) parent[find(static_cast<std::uint32_t>(i))] =
                find(static_cast<std::uint32_t>(j));
    for (std::size_t i = 0; i < d; ++i) comp[i] = find(static_cast<std::uint32_t>(i));
    return Partition::from_assignment(comp);
}

} // namespace detail

/// Threshold clustering: keep edges with weight >= tau (default: the median
/// off-diagonal weight of the layer), groups = connected components of the
/// kept edges. The average-linkage alternative agglomerates while the mean
/// inter-group weight stays >= tau.
inline LayerClustering cluster_layer(const SimilarityLayer& layer,
                                     LayerClusteringMethod method = LayerClusteringMethod::MedianThreshold) {
    const std::size_t d = layer.weight.size();
    LayerClustering out;
    out.metric = layer.metric;
    std::vector<double> off;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) off.push_back(layer.weight[i][j]);
    if (off.empty()) {
        out.groups = Partition::singletons(d);
        return out;
    }
    std::sort(off.begin(), off.end());
    out.threshold = quantile_sorted(off, 0.5);

    if (method == LayerClusteringMethod::MedianThreshold) {
        out.groups = detail::components_of_kept_edges(d, layer.weight, out.threshold);
        return out;
    }

    // average linkage: merge the closest pair while its linkage >= tau
    std::vector<std::vector<std::size_t>> groups(d);
    for (std::size_t i = 0; i < d; ++i) groups[i] = {i};
    std::vector<bool> alive(d, true);
    auto linkage = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t x : groups[a])
            for (std::size_t y : groups[b]) s += layer.weight[x][y];
        return s / (static_cast<double>(groups[a].size()) * static_cast<double>(groups[b].size()));
    };
    while (true) {
        double best = -1.0;
        std::size_t ba = 0, bb = 0;
        for (std::size_t a = 0; a < d; ++a) {
            if (!alive[a]) continue;
            for (std::size_t b = a + 1; b < d; ++b) {
                if (!alive[b]) continue;
                double l = linkage(a, b);
                if (l > best + 1e-15) {
                    best = l;
                    ba = a;
                    bb = b;
                }
            }
        }
        if (best < out.threshold || ba == bb) break;
        groups[ba].insert(groups[ba].end(), groups[bb].begin(), groups[bb].end());
        groups[bb].clear();
        alive[bb] = false;
    }
    std::vector<std::uint32_t> assign(d, 0);
    std::uint32_t next = 0;
    for (std::size_t a = 0; a < d; ++a) {
        if (!alive[a]) continue;
        for (std::size_t x : groups[a]) assign[x] = next;
        ++next;
    }
    out.groups = Partition::from_assignment(assign);
    return out;
}

/// Rand index between two layer clusterings over the same detector set.
inline double layer_agreement(const LayerClustering& a, const LayerClustering& b) {
    if (a.groups.node_count() != b.groups.node_count())
        throw std::invalid_argument("layer clusterings cover different detector sets");
    return rand_index(contingency(a.groups, b.groups)).value;
}

struct DiversificationReport {
    std::vector<std::string> detectors;
    std::vector<std::string> layer_metrics;
    std::vector<LayerClustering> clusterings;
    std::vector<std::vector<double>> agreement;       // layer x layer Rand index
    std::vector<double> diversification;              // per detector, fraction of layers
    std::vector<bool> divergent_layer;                // mean agreement (uncorrelated) < tau_div
    double tau_div = 0.5;
};

/// Detector diversification = fraction of layers where the detector sits in
/// a singleton or minority group (smaller than the layer's largest group).
/// A layer is divergent when its mean agreement with the other layers,
/// correlated metric pairs excluded, falls below tau_div.
inline DiversificationReport diversification_report(const MultilayerNetwork& net,
                                                    LayerClusteringMethod method =
                                                        LayerClusteringMethod::MedianThreshold,
                                                    double tau_div = 0.5) {
    if (net.layers.size() < 2)
        throw std::invalid_argument("diversification needs at least two layers");
    DiversificationReport rep;
    rep.detectors = net.detectors;
    rep.tau_div = tau_div;
    for (const auto& layer : net.layers) {
        rep.layer_metrics.push_back(layer.metric);
        rep.clusterings.push_back(cluster_layer(layer, method));
    }
    const std::size_t L = net.layers.size();
    const std::size_t d = net.detectors.size();
    rep.agreement.assign(L, std::vector<double>(L, 1.0));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j)
            rep.agreement[i][j] = rep.agreement[j][i] =
                layer_agreement(rep.clusterings[i], rep.clusterings[j]);

    rep.diversification.assign(d, 0.0);
    for (const auto& c : rep.clusterings) {
        std::uint32_t largest = 0;
        for (std::uint32_t s : c.groups.sizes()) largest = std::max(largest, s);
        for (std::size_t v = 0; v < d; ++v) {
            std::uint32_t sz = c.groups.sizes()[c.groups.community_of(static_cast<node_t>(v))];
            if (sz == 1 || sz < largest) rep.diversification[v] += 1.0;
        }
    }
    for (double& x : rep.diversification) x /= static_cast<double>(L);

    rep.divergent_layer.assign(L, false);
    for (std::size_t i = 0; i < L; ++i) {
        double sum = 0.0;
        std::size_t cnt = 0;
        for (std::size_t j = 0; j < L; ++j) {
            if (i == j) continue;
            if (metrics_correlated(rep.layer_metrics[i], rep.layer_metrics[j])) continue;
            sum += rep.agreement[i][j];
            ++cnt;
        }
        if (cnt > 0 && sum / static_cast<double>(cnt) < tau_div) rep.divergent_layer[i] = true;
    }
    return rep;
}

} // namespace commeval

#endif // COMMEVAL_EVIDENCE_DIVERSIFY_HPP_
