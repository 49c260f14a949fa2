#ifndef COMMEVAL_EVIDENCE_EVIDENCE_HPP_
#define COMMEVAL_EVIDENCE_EVIDENCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/metrics/structural.hpp"

namespace commeval {

/// Relative distance between two non-negative scores:
/// d(s1, s2) = |s1 - s2| / (s1 + s2), with d(0, 0) = 0 by convention.
/// Signed scores must be mapped into [0,1] by the caller (ARI -> (x+1)/2).
inline double score_distance(double s1, double s2) {
    if (s1 < 0.0 || s2 < 0.0)
        throw std::domain_error("score_distance requires non-negative scores");
    if (s1 == 0.0 && s2 == 0.0) return 0.0;
    return std::abs(s1 - s2) / (s1 + s2);
}

enum class Strategy { Structural, Functional, Combined };

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Structural: return "structural";
        case Strategy::Functional: return "functional";
        case Strategy::Combined: return "combined";
    }
    return "?";
}

/// One measurement: (network, iteration, strategy, detector, metric, seed, value).
struct EvidenceRecord {
    std::string network_id;
    std::uint32_t iteration = 0;
    Strategy strategy = Strategy::Structural;
    std::string detector;  // detector id, or "GT" for ground-truth-side records
    std::string metric;
    std::uint64_t seed = 0;
    double value = 0.0;
};

struct EvidenceSummary {
    double median = 0.0, q1 = 0.0, q3 = 0.0, iqr = 0.0;
    double mean = 0.0, stddev = 0.0, cv = 0.0;
    double min = 0.0, max = 0.0;
    std::size_t count = 0;
    bool cv_defined = false;  // cv = stddev/mean needs mean > 0
};

/// Linear interpolation between closest ranks on the sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    if (sorted.size() == 1) return sorted[0];
    double idx = p * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(idx);
    if (lo >= sorted.size() - 1) return sorted.back();
    double frac = idx - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

/// Order statistics plus mean/population-std/CV. Values are sorted
/// internally, so the summary is permutation-invariant.
inline EvidenceSummary summarize(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("summarize needs a non-empty group");
    std::sort(values.begin(), values.end());
    EvidenceSummary s;
    s.count = values.size();
    s.min = values.front();
    s.max = values.back();
    s.median = quantile_sorted(values, 0.5);
    s.q1 = quantile_sorted(values, 0.25);
    s.q3 = quantile_sorted(values, 0.75);
    s.iqr = s.q3 - s.q1;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(s.count);
    double var = 0.0;
    for (double v : values) var += (v - s.mean) * (v - s.mean);
    var /= static_cast<double>(s.count);
    s.stddev = std::sqrt(var);
    if (s.mean > 0.0) {
        s.cv = s.stddev / s.mean;
        s.cv_defined = true;
    }
    return s;
}

/// Eq-style distances between ground-truth structural scores and one
/// detector's structural scores, for the combined-evidence strategy.
/// Metrics compared: modularity (clamped at 0), community count, coverage,
/// mean conductance.
struct CombinedDistances {
    double modularity = 0.0;
    double k = 0.0;
    double coverage = 0.0;
    double conductance_mean = 0.0;
};

inline CombinedDistances combined_evidence(const StructuralScores& gt,
                                           const StructuralScores& detected) {
    CombinedDistances d;
    d.modularity = score_distance(std::max(0.0, gt.modularity), std::max(0.0, detected.modularity));
    d.k = score_distance(static_cast<double>(gt.k), static_cast<double>(detected.k));
    d.coverage = score_distance(gt.coverage, detected.coverage);
    d.conductance_mean = score_distance(gt.conductance_mean, detected.conductance_mean);
    return d;
}

/// Fixed 12-significant-digit formatting shared by every emitted artifact,
/// so golden files are byte-stable.
inline std::string format_value(double v) {
    char buf[64];
    if (std::isnan(v)) return "nan";
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

/// Append-only evidence collection with fixed-order CSV export.
class EvidenceStore {
  public:
    void add(EvidenceRecord r) { records_.push_back(std::move(r)); }
    const std::vector<EvidenceRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    std::vector<double> values_where(
        const std::function<bool(const EvidenceRecord&)>& pred) const {
        std::vector<double> out;
        for (const auto& r : records_)
            if (pred(r)) out.push_back(r.value);
        return out;
    }

    void write_csv(std::ostream& out) const {
        out << "network_id,iteration,strategy,detector,metric,seed,value\n";
        for (const auto& r : records_) {
            out << r.network_id << ',' << r.iteration << ',' << to_string(r.strategy) << ','
                << r.detector << ',' << r.metric << ',' << r.seed << ','
                << format_value(r.value) << '\n';
        }
    }

  private:
    std::vector<EvidenceRecord> records_;
};

} // namespace commeval

#endif // COMMEVAL_EVIDENCE_EVIDENCE_HPP_
