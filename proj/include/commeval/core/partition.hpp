#ifndef COMMEVAL_CORE_PARTITION_HPP_
#define COMMEVAL_CORE_PARTITION_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "commeval/core/graph.hpp"

namespace commeval {

/// Assignment of every node to exactly one community. Community ids are
/// contiguous 0..k-1, renumbered in order of first appearance by node id,
/// and every community is non-empty.
class Partition {
  public:
    Partition() = default;

    /// Normalizing constructor: arbitrary community ids in `raw` are mapped
    /// to contiguous ids by first appearance.
    static Partition from_assignment(const std::vector<std::uint32_t>& raw) {
        Partition p;
        p.assignment_.resize(raw.size());
        std::vector<std::int64_t> remap;
        std::uint32_t next = 0;
        std::uint32_t max_raw = 0;
        for (std::uint32_t c : raw) max_raw = std::max(max_raw, c);
        remap.assign(static_cast<std::size_t>(max_raw) + 1, -1);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (remap[raw[i]] < 0) remap[raw[i]] = next++;
            p.assignment_[i] = static_cast<std::uint32_t>(remap[raw[i]]);
        }
        p.sizes_.assign(next, 0);
        for (std::uint32_t c : p.assignment_) ++p.sizes_[c];
        return p;
    }

    static Partition singletons(std::size_t n) {
        std::vector<std::uint32_t> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::uint32_t>(i);
        return from_assignment(a);
    }

    static Partition one_community(std::size_t n) {
        return from_assignment(std::vector<std::uint32_t>(n, 0));
    }

    std::size_t node_count() const { return assignment_.size(); }
    std::uint32_t community_count() const { return static_cast<std::uint32_t>(sizes_.size()); }
    std::uint32_t community_of(node_t u) const { return assignment_.at(u); }
    std::uint32_t operator[](node_t u) const { return assignment_[u]; }
    const std::vector<std::uint32_t>& assignment() const { return assignment_; }
    const std::vector<std::uint32_t>& sizes() const { return sizes_; }

    std::vector<std::vector<node_t>> communities() const {
        std::vector<std::vector<node_t>> out(sizes_.size());
        for (std::uint32_t c = 0; c < sizes_.size(); ++c) out[c].reserve(sizes_[c]);
        for (node_t u = 0; u < assignment_.size(); ++u)
            out[assignment_[u]].push_back(u);
        return out;
    }

    /// True when the two partitions induce the same grouping (ids may differ,
    /// but normalization makes equal groupings byte-equal).
    bool same_grouping(const Partition& other) const {
        return assignment_ == other.assignment_;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<std::uint32_t> assignment_;
    std::vector<std::uint32_t> sizes_;
};

/// Ground-truth communities: a partition plus the class label behind each
/// community. Lenient loading may append flagged singleton communities for
/// unlabeled nodes.
struct GroundTruth {
    Partition partition;
    std::vector<std::string> class_names;   // class_names[c] = label of community c
    std::size_t lenient_singletons = 0;     // communities appended for unlabeled nodes

    const std::string& class_of(node_t u) const {
        return class_names.at(partition.community_of(u));
    }
};

} // namespace commeval

#endif // COMMEVAL_CORE_PARTITION_HPP_
