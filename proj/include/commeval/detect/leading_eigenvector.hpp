#ifndef COMMEVAL_DETECT_LEADING_EIGENVECTOR_HPP_
#define COMMEVAL_DETECT_LEADING_EIGENVECTOR_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {
namespace detail {

/// Leading eigenpair of the (generalized) modularity matrix restricted to a
/// group, via shifted power iteration. Returns the eigenvalue; fills `vec`.
/// Fully deterministic: fixed start vector, fixed iteration cap.
class ModularityMatrix {
  public:
    ModularityMatrix(const Graph& g, const std::vector<node_t>& group)
        : g_(g), group_(group), m_(static_cast<double>(g.edge_count())) {
        index_.assign(g.node_count(), SIZE_MAX);
        for (std::size_t i = 0; i < group.size(); ++i) index_[group[i]] = i;
        deg_.resize(group.size());
        for (std::size_t i = 0; i < group.size(); ++i)
            deg_[i] = static_cast<double>(g.degree(group[i]));
        // diagonal correction for the generalized matrix:
        // B(g)_ii -= sum_{j in g} B_ij = (#neighbors in g) - k_i * K_g / 2m
        double group_deg = 0.0;
        for (double d : deg_) group_deg += d;
        row_sum_.assign(group.size(), 0.0);
        for (std::size_t i = 0; i < group.size(); ++i) {
            double in_group = 0.0;
            for (node_t v : g.neighbors(group[i]))
                if (index_[v] != SIZE_MAX) in_group += 1.0;
            row_sum_[i] = in_group - deg_[i] * group_deg / (2.0 * m_);
        }
        // shift bound: max_i sum_j |B_ij| keeps the shifted matrix's leading
        // eigenvalue aligned with the most positive eigenvalue of B
        shift_ = 0.0;
        for (std::size_t i = 0; i < group.size(); ++i) {
            double s = std::abs(row_sum_[i]);  // diagonal entry magnitude
            for (std::size_t j = 0; j < group.size(); ++j) {
                if (i == j) continue;
                double a = adjacent(i, j) ? 1.0 : 0.0;
                s += std::abs(a - deg_[i] * deg_[j] / (2.0 * m_));
            }
            shift_ = std::max(shift_, s);
        }
    }

    std::size_t size() const { return group_.size(); }

    // y = B(g) x  (dense fallback through adjacency; fine at desk scale)
    void multiply(const std::vector<double>& x, std::vector<double>& y) const {
        const std::size_t k = group_.size();
        double xdot_deg = 0.0;
        for (std::size_t j = 0; j < k; ++j) xdot_deg += deg_[j] * x[j];
        for (std::size_t i = 0; i < k; ++i) {
            double acc = -deg_[i] * xdot_deg / (2.0 * m_) - row_sum_[i] * x[i];
            for (node_t v : g_.neighbors(group_[i])) {
                std::size_t j = index_[v];
                if (j != SIZE_MAX) acc += x[j];
            }
            y[i] = acc;
        }
    }

    double leading_eigenpair(std::vector<double>& vec) const {
        const std::size_t k = group_.size();
        vec.assign(k, 0.0);
        if (k == 0) return 0.0;
        if (k == 1) {
            vec[0] = 1.0;
            return eigen_value(vec);
        }
        // fixed pseudo-random start; never orthogonal to anything by accident
        for (std::size_t i = 0; i < k; ++i)
            vec[i] = 1.0 + static_cast<double>((i * 2654435761ULL) % 97) / 97.0;
        normalize(vec);
        std::vector<double> next(k);
        double prev_ev = 0.0;
        for (int it = 0; it < 20000; ++it) {
            multiply(vec, next);
            for (std::size_t i = 0; i < k; ++i) next[i] += shift_ * vec[i];
            normalize(next);
            vec.swap(next);
            if (it % 16 == 15) {
                double ev = eigen_value(vec);
                if (std::abs(ev - prev_ev) < 1e-13) break;
                prev_ev = ev;
            }
        }
        return eigen_value(vec);
    }

    double eigen_value(const std::vector<double>& v) const {
        std::vector<double> bv(v.size());
        multiply(v, bv);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            num += v[i] * bv[i];
            den += v[i] * v[i];
        }
        return den > 0.0 ? num / den : 0.0;
    }

    /// Modularity change of splitting the group by sign vector s (+-1):
    /// dQ = s^T B(g) s / (4m)
    double split_gain(const std::vector<double>& signs) const {
        std::vector<double> bs(signs.size());
        multiply(signs, bs);
        double num = 0.0;
        for (std::size_t i = 0; i < signs.size(); ++i) num += signs[i] * bs[i];
        return num / (4.0 * m_);
    }

  private:
    bool adjacent(std::size_t i, std::size_t j) const {
        return g_.has_edge(group_[i], group_[j]);
    }

    static void normalize(std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0)
            for (double& x : v) x /= norm;
    }

    const Graph& g_;
    std::vector<node_t> group_;
    double m_;
    std::vector<std::size_t> index_;
    std::vector<double> deg_;
    std::vector<double> row_sum_;
    double shift_ = 0.0;
};

} // namespace detail

/// Spectral bisection on the modularity matrix, applied recursively.
/// A group splits by the sign pattern of the leading eigenvector and the
/// recursion stops when the leading eigenvalue is numerically zero
/// (<= 1e-9) or the split would not increase modularity. Deterministic;
/// the seed parameter is unused.
inline Partition detect_leading_eigenvector(const Graph& g, std::uint64_t /*seed*/ = 0) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (g.edge_count() == 0) return Partition::singletons(n);

    std::vector<std::uint32_t> comm(n, 0);
    std::uint32_t next_id = 1;
    std::vector<std::vector<node_t>> work;
    {
        std::vector<node_t> all(n);
        for (std::uint32_t u = 0; u < n; ++u) all[u] = u;
        work.push_back(std::move(all));
    }

    const double eigen_tol = 1e-9;
    while (!work.empty()) {
        std::vector<node_t> group = std::move(work.back());
        work.pop_back();
        if (group.size() < 2) continue;

        detail::ModularityMatrix B(g, group);
        std::vector<double> vec;
        double ev = B.leading_eigenpair(vec);
        if (ev <= eigen_tol) continue;

        std::vector<double> signs(group.size());
        std::vector<node_t> pos, neg;
        for (std::size_t i = 0; i < group.size(); ++i) {
            signs[i] = vec[i] >= 0.0 ? 1.0 : -1.0;
            (signs[i] > 0 ? pos : neg).push_back(group[i]);
        }
        if (pos.empty() || neg.empty()) continue;
        if (B.split_gain(signs) <= 1e-12) continue;

        for (node_t u : neg) comm[u] = next_id;
        ++next_id;
        work.push_back(std::move(pos));
        work.push_back(std::move(neg));
    }
    return Partition::from_assignment(comm);
}

} // namespace commeval

#endif // COMMEVAL_DETECT_LEADING_EIGENVECTOR_HPP_
