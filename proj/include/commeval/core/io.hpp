#ifndef COMMEVAL_CORE_IO_HPP_
#define COMMEVAL_CORE_IO_HPP_

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "commeval/core/graph.hpp"
#include "commeval/core/partition.hpp"

namespace commeval {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

} // namespace detail

/// Edge-list format: one edge per line, whitespace-separated
/// "src dst [recurrence]", '#' starts a comment. Repeated (u,v) lines merge
/// by summing recurrence; self-loops are rejected with their line number.
inline Graph read_edge_list(std::istream& in,
                            const std::function<void(const std::string&)>& warn = {}) {
    GraphBuilder b;
    std::string line;
    std::size_t lineno = 0;
    std::size_t edge_lines = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        auto tok = detail::split_ws(body);
        if (tok.empty()) continue;
        if (tok.size() < 2) throw ParseError("edge line needs at least 2 tokens", lineno);
        std::uint32_t rec = 1;
        if (tok.size() >= 3) {
            unsigned long long v = 0;
            auto [p, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), v);
            if (ec != std::errc() || p != tok[2].data() + tok[2].size() || v < 1)
                throw ParseError("bad recurrence token '" + tok[2] + "'", lineno);
            rec = static_cast<std::uint32_t>(v);
        }
        if (tok[0] == tok[1]) throw ParseError("self-loop on '" + tok[0] + "'", lineno);
        node_t u = b.add_node(tok[0]);
        node_t v = b.add_node(tok[1]);
        b.add_edge(u, v, rec);
        ++edge_lines;
    }
    Graph g = b.build();
    if (warn && edge_lines > g.edge_count())
        warn(std::to_string(edge_lines - g.edge_count()) +
             " repeated edge line(s) merged by summing recurrence");
    return g;
}

inline Graph load_graph(const std::string& path,
                        const std::function<void(const std::string&)>& warn = {}) {
    auto in = detail::open_or_throw(path);
    return read_edge_list(in, warn);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges())
        out << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.recurrence << '\n';
}

inline void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_edge_list(out, g);
}

enum class GroundTruthMode { Strict, Lenient };

/// Ground-truth format: "node<TAB>class" (any whitespace accepted). One
/// community per distinct class, in order of first appearance. Strict mode
/// rejects unlabeled nodes; lenient mode turns them into flagged singletons.
inline GroundTruth read_ground_truth(std::istream& in, const Graph& g,
                                     GroundTruthMode mode = GroundTruthMode::Strict) {
    const std::size_t n = g.node_count();
    std::vector<std::string> label(n);
    std::vector<bool> labeled(n, false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        auto tok = detail::split_ws(body);
        if (tok.empty()) continue;
        if (tok.size() < 2) throw ParseError("ground-truth line needs node and class", lineno);
        if (!g.has_node(tok[0]))
            throw ParseError("unknown node name '" + tok[0] + "'", lineno);
        node_t u = g.id_of(tok[0]);
        if (labeled[u] && label[u] != tok[1])
            throw ParseError("conflicting labels for node '" + tok[0] + "': '" +
                                 label[u] + "' vs '" + tok[1] + "'",
                             lineno);
        label[u] = tok[1];
        labeled[u] = true;
    }
    GroundTruth gt;
    std::unordered_map<std::string, std::uint32_t> class_id;
    std::vector<std::uint32_t> assign(n, 0);
    for (node_t u = 0; u < n; ++u) {
        if (!labeled[u]) continue;
        auto it = class_id.find(label[u]);
        if (it == class_id.end()) {
            it = class_id.emplace(label[u], static_cast<std::uint32_t>(gt.class_names.size())).first;
            gt.class_names.push_back(label[u]);
        }
        assign[u] = it->second;
    }
    std::uint32_t next = static_cast<std::uint32_t>(gt.class_names.size());
    for (node_t u = 0; u < n; ++u) {
        if (labeled[u]) continue;
        if (mode == GroundTruthMode::Strict)
            throw std::runtime_error("node '" + g.name(u) + "' has no ground-truth label");
        assign[u] = next++;
        gt.class_names.push_back("unlabeled:" + g.name(u));
        ++gt.lenient_singletons;
    }
    if (n > 0) gt.partition = Partition::from_assignment(assign);
    // from_assignment renumbers by first appearance; realign class names.
    std::vector<std::string> names(gt.partition.community_count());
    for (node_t u = 0; u < n; ++u) names[gt.partition.community_of(u)] = gt.class_names[assign[u]];
    gt.class_names = std::move(names);
    return gt;
}

inline GroundTruth load_ground_truth(const std::string& path, const Graph& g,
                                     GroundTruthMode mode = GroundTruthMode::Strict) {
    auto in = detail::open_or_throw(path);
    return read_ground_truth(in, g, mode);
}

inline void write_ground_truth(std::ostream& out, const Graph& g, const GroundTruth& gt) {
    for (node_t u = 0; u < g.node_count(); ++u)
        out << g.name(u) << '\t' << gt.class_of(u) << '\n';
}

/// Partition format: "node<TAB>community_id". Every node of the graph must
/// appear exactly once; community tokens are opaque strings.
inline Partition read_partition(std::istream& in, const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> assign(n, 0);
    std::vector<bool> covered(n, false);
    std::unordered_map<std::string, std::uint32_t> comm_id;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        auto tok = detail::split_ws(body);
        if (tok.empty()) continue;
        if (tok.size() < 2) throw ParseError("partition line needs node and community", lineno);
        if (!g.has_node(tok[0]))
            throw ParseError("unknown node name '" + tok[0] + "'", lineno);
        node_t u = g.id_of(tok[0]);
        if (covered[u]) throw ParseError("node '" + tok[0] + "' assigned twice", lineno);
        auto it = comm_id.find(tok[1]);
        if (it == comm_id.end())
            it = comm_id.emplace(tok[1], static_cast<std::uint32_t>(comm_id.size())).first;
        assign[u] = it->second;
        covered[u] = true;
    }
    for (node_t u = 0; u < n; ++u)
        if (!covered[u])
            throw std::runtime_error("partition file misses node '" + g.name(u) + "'");
    return n > 0 ? Partition::from_assignment(assign) : Partition{};
}

inline Partition load_partition(const std::string& path, const Graph& g) {
    auto in = detail::open_or_throw(path);
    return read_partition(in, g);
}

inline void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
    for (node_t u = 0; u < g.node_count(); ++u)
        out << g.name(u) << '\t' << p.community_of(u) << '\n';
}

} // namespace commeval

#endif // COMMEVAL_CORE_IO_HPP_
