#ifndef COMMEVAL_FILTERS_FILTERS_HPP_
#define COMMEVAL_FILTERS_FILTERS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {

enum class FilterKind { Edge, Node, Component };

inline const char* to_string(FilterKind k) {
    switch (k) {
        case FilterKind::Edge: return "edge";
        case FilterKind::Node: return "node";
        case FilterKind::Component: return "component";
    }
    return "?";
}

/// Table-III-style short code: EF / NF / CF.
inline const char* short_code(FilterKind k) {
    switch (k) {
        case FilterKind::Edge: return "EF";
        case FilterKind::Node: return "NF";
        case FilterKind::Component: return "CF";
    }
    return "?";
}

struct FilterSpec {
    FilterKind kind = FilterKind::Edge;
    // edge filter
    std::optional<std::uint32_t> min_recurrence;  // drop edges with recurrence < r
    std::optional<double> min_overlap;            // drop edges with Jaccard overlap < theta
    // node filter
    std::vector<std::string> classes;
    // component filter
    std::uint32_t min_component_size = 2;
};

struct FilterOutcome {
    Graph graph;
    std::optional<GroundTruth> ground_truth;
    std::size_t removed_edges = 0;
    std::size_t removed_nodes = 0;
    double removed_fraction = 0.0;  // of edges for edge filter, of nodes otherwise
    std::vector<std::string> warnings;
};

namespace detail {

/// Induced subgraph on `keep` (sorted node ids); ground truth restricted to
/// the surviving nodes, empty classes dropped.
inline FilterOutcome induced(const Graph& g, const std::optional<GroundTruth>& gt,
                             const std::vector<node_t>& keep) {
    FilterOutcome out;
    std::vector<bool> kept(g.node_count(), false);
    for (node_t u : keep) kept[u] = true;
    GraphBuilder b;
    for (node_t u : keep) b.add_node(g.name(u));
    for (const Edge& e : g.edges())
        if (kept[e.u] && kept[e.v])
            b.add_edge(b.add_node(g.name(e.u)), b.add_node(g.name(e.v)), e.recurrence);
    if (g.has_labels())
        for (node_t u : keep) b.set_label(b.add_node(g.name(u)), g.label(u));
    out.graph = b.build();
    out.removed_nodes = g.node_count() - keep.size();
    out.removed_edges = g.edge_count() - out.graph.edge_count();
    if (gt) {
        GroundTruth sub;
        std::vector<std::uint32_t> assign;
        assign.reserve(keep.size());
        std::vector<std::string> labels;
        for (node_t u : keep) {
            const std::string& cls = gt->class_of(u);
            std::uint32_t id = 0;
            auto it = std::find(sub.class_names.begin(), sub.class_names.end(), cls);
            if (it == sub.class_names.end()) {
                id = static_cast<std::uint32_t>(sub.class_names.size());
                sub.class_names.push_back(cls);
            } else {
                id = static_cast<std::uint32_t>(it - sub.class_names.begin());
            }
            assign.push_back(id);
            labels.push_back(cls);
        }
        if (!assign.empty()) {
            sub.partition = Partition::from_assignment(assign);
            // realign names with the renumbered partition
            std::vector<std::string> names(sub.partition.community_count());
            for (std::size_t i = 0; i < keep.size(); ++i)
                names[sub.partition.community_of(static_cast<node_t>(i))] = labels[i];
            sub.class_names = std::move(names);
        } else {
            sub.class_names.clear();
        }
        out.ground_truth = std::move(sub);
    }
    return out;
}

/// Jaccard overlap of the endpoint neighborhoods, endpoints excluded.
inline double neighborhood_overlap(const Graph& g, node_t u, node_t v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t inter = 0, uni = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == v) { ++i; continue; }
        if (b[j] == u) { ++j; continue; }
        if (a[i] < b[j]) { ++uni; ++i; }
        else if (a[i] > b[j]) { ++uni; ++j; }
        else { ++inter; ++uni; ++i; ++j; }
    }
    while (i < a.size()) { if (a[i] != v) ++uni; ++i; }
    while (j < b.size()) { if (b[j] != u) ++uni; ++j; }
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

} // namespace detail

/// Noisy-edge control: drops edges with recurrence below `min_recurrence`
/// or Jaccard neighborhood overlap below `min_overlap` (each criterion
/// active only when supplied). The overlap criterion is re-applied until
/// stable, so every surviving edge satisfies it in the filtered graph and
/// the filter is idempotent. Nodes isolated by the removal are dropped
/// and counted.
inline FilterOutcome filter_edges(const Graph& g, const std::optional<GroundTruth>& gt,
                                  std::optional<std::uint32_t> min_recurrence,
                                  std::optional<double> min_overlap) {
    if (!min_recurrence && !min_overlap)
        throw std::invalid_argument("edge filter needs min_recurrence and/or min_overlap");
    if (min_overlap && (*min_overlap < 0.0 || *min_overlap > 1.0))
        throw std::invalid_argument("min_overlap must be in [0,1]");
    if (min_recurrence && *min_recurrence < 1)
        throw std::invalid_argument("min_recurrence must be >= 1");

    auto build_from = [&](const std::vector<Edge>& edges, bool all_nodes) {
        GraphBuilder b;
        if (all_nodes)
            for (node_t u = 0; u < g.node_count(); ++u) b.add_node(g.name(u));
        else {
            std::vector<bool> touch(g.node_count(), false);
            for (const Edge& e : edges) touch[e.u] = touch[e.v] = true;
            for (node_t u = 0; u < g.node_count(); ++u)
                if (touch[u]) b.add_node(g.name(u));
        }
        for (const Edge& e : edges)
            b.add_edge(b.add_node(g.name(e.u)), b.add_node(g.name(e.v)), e.recurrence);
        if (g.has_labels())
            for (node_t u = 0; u < g.node_count(); ++u)
                if (b.has_node(g.name(u))) b.set_label(b.add_node(g.name(u)), g.label(u));
        return b.build();
    };

    // recurrence criterion is static; apply once
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!min_recurrence || e.recurrence >= *min_recurrence) kept.push_back(e);

    // overlap criterion until fixpoint (edges are in original ids here)
    if (min_overlap && *min_overlap > 0.0) {
        bool changed = true;
        while (changed) {
            changed = false;
            Graph cur = build_from(kept, true);  // same node ids as g
            std::vector<Edge> next;
            for (const Edge& e : kept) {
                if (detail::neighborhood_overlap(cur, e.u, e.v) < *min_overlap)
                    changed = true;
                else
                    next.push_back(e);
            }
            kept = std::move(next);
        }
    }

    FilterOutcome out;
    out.graph = build_from(kept, false);
    out.removed_edges = g.edge_count() - kept.size();
    out.removed_nodes = g.node_count() - out.graph.node_count();
    out.removed_fraction = g.edge_count() > 0
                               ? static_cast<double>(out.removed_edges) /
                                     static_cast<double>(g.edge_count())
                               : 0.0;
    if (gt) {
        std::vector<node_t> keep;
        for (node_t u = 0; u < g.node_count(); ++u)
            if (out.graph.has_node(g.name(u))) keep.push_back(u);
        out.ground_truth = detail::induced(g, gt, keep).ground_truth;
    }
    if (out.graph.node_count() == 0)
        out.warnings.push_back("edge filter removed every edge; the graph is empty");
    if (out.removed_nodes > 0)
        out.warnings.push_back(std::to_string(out.removed_nodes) +
                               " node(s) isolated by edge removal were dropped");
    return out;
}

/// Noisy-node control: removes every node whose ground-truth class is in
/// `classes`, from the graph and from the ground truth alike. A named class
/// that is not present removes nothing and is reported as a warning, which
/// keeps repeated application a no-op.
inline FilterOutcome filter_nodes_by_class(const Graph& g, const GroundTruth& gt,
                                           const std::vector<std::string>& classes) {
    if (classes.empty()) throw std::invalid_argument("node filter needs at least one class");
    std::vector<std::string> missing;
    for (const auto& cls : classes)
        if (std::find(gt.class_names.begin(), gt.class_names.end(), cls) == gt.class_names.end())
            missing.push_back(cls);
    std::set<std::string> drop(classes.begin(), classes.end());
    std::vector<node_t> keep;
    for (node_t u = 0; u < g.node_count(); ++u)
        if (!drop.count(gt.class_of(u))) keep.push_back(u);
    FilterOutcome out = detail::induced(g, std::optional<GroundTruth>(gt), keep);
    out.removed_fraction =
        g.node_count() > 0
            ? static_cast<double>(out.removed_nodes) / static_cast<double>(g.node_count())
            : 0.0;
    for (const auto& cls : missing)
        out.warnings.push_back("class '" + cls + "' not present in the ground truth; nothing removed");
    if (out.graph.node_count() == 0)
        out.warnings.push_back("node filter removed every node; the graph is empty");
    return out;
}

/// Small-component control: drops every connected component with fewer than
/// `min_size` nodes.
inline FilterOutcome filter_components(const Graph& g, const std::optional<GroundTruth>& gt,
                                       std::uint32_t min_size) {
    if (min_size < 2) throw std::invalid_argument("component filter needs min_size >= 2");
    std::vector<node_t> keep;
    for (const auto& comp : components(g))
        if (comp.size() >= min_size) keep.insert(keep.end(), comp.begin(), comp.end());
    std::sort(keep.begin(), keep.end());
    FilterOutcome out = detail::induced(g, gt, keep);
    out.removed_fraction =
        g.node_count() > 0
            ? static_cast<double>(out.removed_nodes) / static_cast<double>(g.node_count())
            : 0.0;
    if (out.graph.node_count() == 0 && g.node_count() > 0)
        out.warnings.push_back("component filter removed every component; the graph is empty");
    return out;
}

/// Dispatch on a FilterSpec. The ground truth is required for node filters.
inline FilterOutcome apply_filter(const Graph& g, const std::optional<GroundTruth>& gt,
                                  const FilterSpec& spec) {
    switch (spec.kind) {
        case FilterKind::Edge:
            return filter_edges(g, gt, spec.min_recurrence, spec.min_overlap);
        case FilterKind::Node:
            if (!gt) throw std::invalid_argument("node filter requires ground truth");
            return filter_nodes_by_class(g, *gt, spec.classes);
        case FilterKind::Component:
            return filter_components(g, gt, spec.min_component_size);
    }
    throw std::logic_error("unreachable");
}

/// Classes whose members' edges mostly leave the class; candidates for the
/// node filter, surfaced for operator confirmation. Returns (class, ratio)
/// pairs with ratio > 0.5, sorted by descending ratio.
inline std::vector<std::pair<std::string, double>> candidate_noisy_classes(
    const Graph& g, const GroundTruth& gt) {
    std::vector<double> inter(gt.partition.community_count(), 0.0);
    std::vector<double> total(gt.partition.community_count(), 0.0);
    for (const Edge& e : g.edges()) {
        std::uint32_t cu = gt.partition.community_of(e.u);
        std::uint32_t cv = gt.partition.community_of(e.v);
        total[cu] += 1.0;
        total[cv] += 1.0;
        if (cu != cv) {
            inter[cu] += 1.0;
            inter[cv] += 1.0;
        }
    }
    std::vector<std::pair<std::string, double>> out;
    for (std::uint32_t c = 0; c < gt.partition.community_count(); ++c) {
        if (total[c] == 0.0) continue;
        double ratio = inter[c] / total[c];
        if (ratio > 0.5) out.emplace_back(gt.class_names[c], ratio);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

} // namespace commeval

#endif // COMMEVAL_FILTERS_FILTERS_HPP_
