#ifndef COMMEVAL_CORE_GRAPH_HPP_
#define COMMEVAL_CORE_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace commeval {

using node_t = std::uint32_t;

struct Edge {
    node_t u, v;           // u < v always
    std::uint32_t recurrence = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

class Graph;

/// Accumulates nodes/edges, then canonicalizes. Repeated mentions of the same
/// unordered pair merge by summing recurrence. Self-loops are rejected.
class GraphBuilder {
  public:
    node_t add_node(const std::string& name) {
        auto it = name_to_id_.find(name);
        if (it != name_to_id_.end()) return it->second;
        node_t id = static_cast<node_t>(names_.size());
        names_.push_back(name);
        name_to_id_.emplace(name, id);
        return id;
    }

    bool has_node(const std::string& name) const { return name_to_id_.count(name) > 0; }

    void add_edge(node_t u, node_t v, std::uint32_t recurrence = 1) {
        if (u == v) throw std::invalid_argument("self-loop on node " + names_.at(u));
        if (u >= names_.size() || v >= names_.size())
            throw std::invalid_argument("edge endpoint out of range");
        if (recurrence < 1) throw std::invalid_argument("recurrence must be >= 1");
        if (u > v) std::swap(u, v);
        recurrence_[{u, v}] += recurrence;
    }

    void set_label(node_t u, const std::string& cls) {
        if (labels_.size() < names_.size()) labels_.resize(names_.size());
        labels_.at(u) = cls;
    }

    Graph build() const;

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, node_t> name_to_id_;
    std::map<std::pair<node_t, node_t>, std::uint64_t> recurrence_;
    std::vector<std::string> labels_;
};

/// Immutable undirected simple graph. Nodes are dense ids 0..n-1 with string
/// names; each edge carries a recurrence count (>= 1, default 1). Optional
/// per-node class labels hold ground-truth metadata when present.
class Graph {
  public:
    Graph() = default;

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const node_t> neighbors(node_t u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    std::size_t degree(node_t u) const { return offsets_[u + 1] - offsets_[u]; }

    const std::string& name(node_t u) const { return names_.at(u); }
    const std::vector<std::string>& names() const { return names_; }
    node_t id_of(const std::string& name) const {
        auto it = name_to_id_.find(name);
        if (it == name_to_id_.end())
            throw std::invalid_argument("unknown node name: " + name);
        return it->second;
    }
    bool has_node(const std::string& name) const { return name_to_id_.count(name) > 0; }

    bool has_edge(node_t u, node_t v) const {
        if (u == v) return false;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::uint32_t recurrence(node_t u, node_t v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0});
        if (it == edges_.end() || it->u != u || it->v != v)
            throw std::invalid_argument("no such edge");
        return it->recurrence;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(node_t u) const { return labels_.at(u); }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    friend class GraphBuilder;

    std::vector<std::string> names_;
    std::unordered_map<std::string, node_t> name_to_id_;
    std::vector<Edge> edges_;           // sorted by (u, v)
    std::vector<std::size_t> offsets_;  // CSR, size n+1
    std::vector<node_t> adj_;           // sorted neighbor lists
    std::vector<std::string> labels_;   // empty when no metadata attached
};

inline Graph GraphBuilder::build() const {
    Graph g;
    g.names_ = names_;
    g.name_to_id_ = name_to_id_;
    g.edges_.reserve(recurrence_.size());
    for (const auto& [pair, rec] : recurrence_) {
        std::uint64_t r = rec;
        if (r > UINT32_MAX) r = UINT32_MAX;
        g.edges_.push_back({pair.first, pair.second, static_cast<std::uint32_t>(r)});
    }
    const std::size_t n = names_.size();
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);
    if (!labels_.empty()) {
        g.labels_ = labels_;
        g.labels_.resize(n);
    }
    return g;
}

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    double density = 0.0;
    double clustering_coeff = 0.0;  // transitivity: 3*triangles / connected triples
    std::size_t n_components = 0;
};

/// Connected components: each sorted by node id, list sorted by
/// (size descending, smallest id ascending).
inline std::vector<std::vector<node_t>> components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<node_t>> comps;
    std::vector<bool> seen(n, false);
    std::vector<node_t> stack;
    for (node_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<node_t> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (node_t v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

inline GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.node_count();
    s.m = g.edge_count();
    if (s.n == 0) return s;
    s.max_degree = 0;
    s.min_degree = SIZE_MAX;
    std::uint64_t triples = 0;
    for (node_t u = 0; u < s.n; ++u) {
        std::size_t d = g.degree(u);
        s.max_degree = std::max(s.max_degree, d);
        s.min_degree = std::min(s.min_degree, d);
        triples += static_cast<std::uint64_t>(d) * (d ? d - 1 : 0) / 2;
    }
    if (s.n >= 2)
        s.density = 2.0 * static_cast<double>(s.m) /
                    (static_cast<double>(s.n) * static_cast<double>(s.n - 1));
    // Each triangle is counted once per edge by the common-neighbor scan.
    std::uint64_t closed = 0;
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else { ++closed; ++i; ++j; }
        }
    }
    s.clustering_coeff = triples > 0 ? static_cast<double>(closed) / static_cast<double>(triples) : 0.0;
    s.n_components = components(g).size();
    return s;
}

} // namespace commeval

#endif // COMMEVAL_CORE_GRAPH_HPP_
