#ifndef COMMEVAL_METRICS_PAIRWISE_HPP_
#define COMMEVAL_METRICS_PAIRWISE_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/detect/detectors.hpp"
#include "commeval/evidence/evidence.hpp"
#include "commeval/metrics/similarity.hpp"

namespace commeval {

/// Detector-by-detector similarity matrix for one metric. Values are the
/// metric's normalized form (raw orientation); cv records the spread over
/// repetition pairs.
struct PairwiseMatrix {
    SimMetric metric;
    std::vector<std::string> detectors;
    std::vector<std::vector<double>> value;  // mean over rep pairs
    std::vector<std::vector<double>> cv;
};

/// Groups runs by detector, preserving first-appearance order.
inline std::map<std::string, std::vector<const DetectionRun*>> group_runs(
    const std::vector<DetectionRun>& runs, std::vector<std::string>* order = nullptr) {
    std::map<std::string, std::vector<const DetectionRun*>> by;
    if (order) order->clear();
    for (const auto& r : runs) {
        auto it = by.find(r.detector.id);
        if (it == by.end()) {
            if (order) order->push_back(r.detector.id);
            it = by.emplace(r.detector.id, std::vector<const DetectionRun*>{}).first;
        }
        it->second.push_back(&r);
    }
    return by;
}

/// Pairwise inter-detector similarities. Repetitions align by index
/// (i-th vs i-th); the all-pairs variant compares every rep combination.
inline PairwiseMatrix pairwise_matrix(const std::vector<DetectionRun>& runs, SimMetric metric,
                                      bool all_pairs = false) {
    std::vector<std::string> order;
    auto by = group_runs(runs, &order);
    if (order.size() < 2)
        throw std::invalid_argument("pairwise matrix needs at least two detectors");
    const std::size_t n_nodes = runs.front().partition.node_count();
    for (const auto& r : runs)
        if (r.partition.node_count() != n_nodes)
            throw std::invalid_argument("runs cover different graphs");

    PairwiseMatrix m;
    m.metric = metric;
    m.detectors = order;
    const std::size_t d = order.size();
    m.value.assign(d, std::vector<double>(d, 0.0));
    m.cv.assign(d, std::vector<double>(d, 0.0));
    double diag = is_distance_metric(metric) ? 0.0 : 1.0;
    for (std::size_t i = 0; i < d; ++i) m.value[i][i] = diag;

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto& a = by[order[i]];
            const auto& b = by[order[j]];
            std::vector<double> vals;
            if (all_pairs) {
                for (const auto* ra : a)
                    for (const auto* rb : b)
                        vals.push_back(similarity(metric, ra->partition, rb->partition).normalized);
            } else {
                std::size_t reps = std::min(a.size(), b.size());
                for (std::size_t r = 0; r < reps; ++r)
                    vals.push_back(similarity(metric, a[r]->partition, b[r]->partition).normalized);
            }
            auto s = summarize(vals);
            m.value[i][j] = m.value[j][i] = s.mean;
            double cv = s.cv_defined ? s.cv : 0.0;
            m.cv[i][j] = m.cv[j][i] = cv;
        }
    }
    return m;
}

} // namespace commeval

#endif // COMMEVAL_METRICS_PAIRWISE_HPP_
