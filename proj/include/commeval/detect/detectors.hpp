#ifndef COMMEVAL_DETECT_DETECTORS_HPP_
#define COMMEVAL_DETECT_DETECTORS_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "commeval/core/errors.hpp"
#include "commeval/core/graph.hpp"
#include "commeval/core/io.hpp"
#include "commeval/core/partition.hpp"
#include "commeval/core/rng.hpp"
#include "commeval/detect/girvan_newman.hpp"
#include "commeval/detect/greedy_modularity.hpp"
#include "commeval/detect/label_propagation.hpp"
#include "commeval/detect/leading_eigenvector.hpp"
#include "commeval/detect/louvain.hpp"
#include "commeval/detect/walktrap.hpp"

namespace commeval {

struct DetectorDescriptor {
    std::string id;      // LM, GM, LE, LP, GN, WT, or EXT:<name>
    std::string family;  // modularity-maximization | dynamic-process | edge-removal | random-walk | external
    bool deterministic = true;
    std::optional<std::string> external_path;  // partition file for EXT detectors

    bool is_external() const { return id.rfind("EXT:", 0) == 0; }
};

inline std::vector<DetectorDescriptor> builtin_detectors() {
    return {
        {"LM", "modularity-maximization", true, std::nullopt},
        {"GM", "modularity-maximization", true, std::nullopt},
        {"LE", "modularity-maximization", true, std::nullopt},
        {"LP", "dynamic-process", false, std::nullopt},
        {"GN", "edge-removal", true, std::nullopt},
        {"WT", "random-walk", false, std::nullopt},
    };
}

inline DetectorDescriptor descriptor_for(const std::string& token) {
    for (const auto& d : builtin_detectors())
        if (d.id == token) return d;
    if (token.rfind("EXT:", 0) == 0) {
        std::string rest = token.substr(4);
        auto eq = rest.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("external detector needs a partition file: EXT:" + rest +
                                        "=<path>");
        DetectorDescriptor d;
        d.id = "EXT:" + rest.substr(0, eq);
        d.family = "external";
        d.deterministic = true;
        d.external_path = rest.substr(eq + 1);
        return d;
    }
    std::string known;
    for (const auto& d : builtin_detectors()) known += (known.empty() ? "" : ", ") + d.id;
    throw std::invalid_argument("unknown detector id '" + token + "' (registered: " + known +
                                ", EXT:<name>=<path>)");
}

/// Comma-separated detector list, e.g. "LM,GM,LP,EXT:infomap=part.tsv".
inline std::vector<DetectorDescriptor> parse_detector_list(const std::string& spec) {
    std::vector<DetectorDescriptor> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(descriptor_for(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty detector list");
    return out;
}

struct DetectionRun {
    DetectorDescriptor detector;
    std::uint64_t seed = 0;
    std::uint32_t rep = 0;
    Partition partition;
    double wall_time = 0.0;  // diagnostics only; never serialized into reports
};

struct DetectOptions {
    bool allow_slow = false;
};

inline DetectionRun detect(const Graph& g, const DetectorDescriptor& d, std::uint64_t seed,
                           const DetectOptions& opts = {}) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    auto start = std::chrono::steady_clock::now();
    Partition p;
    if (d.id == "LM") {
        p = detect_louvain(g, seed);
    } else if (d.id == "GM") {
        p = detect_greedy_modularity(g, seed);
    } else if (d.id == "LE") {
        p = detect_leading_eigenvector(g, seed);
    } else if (d.id == "LP") {
        p = detect_label_propagation(g, seed);
    } else if (d.id == "GN") {
        GirvanNewmanOptions gn;
        gn.allow_slow = opts.allow_slow;
        p = detect_girvan_newman(g, seed, gn);
    } else if (d.id == "WT") {
        p = detect_walktrap(g, seed);
    } else if (d.is_external()) {
        if (!d.external_path)
            throw std::invalid_argument("external detector " + d.id + " has no partition file");
        p = load_partition(*d.external_path, g);
    } else {
        throw std::invalid_argument("unknown detector id '" + d.id + "'");
    }
    DetectionRun run;
    run.detector = d;
    run.seed = seed;
    run.partition = std::move(p);
    run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

/// Wrap an externally produced partition file as a detection run.
inline DetectionRun ingest_external(const Graph& g, const std::string& name,
                                    const std::string& path) {
    DetectorDescriptor d;
    d.id = "EXT:" + name;
    d.family = "external";
    d.deterministic = true;
    d.external_path = path;
    DetectionRun run;
    run.detector = d;
    run.seed = 0;
    run.partition = load_partition(path, g);
    run.wall_time = 0.0;
    return run;
}

struct BatchOptions {
    bool force_reps = false;  // permit reps < 30 for non-deterministic detectors
    unsigned jobs = 0;        // 0 = hardware concurrency
    bool allow_slow = false;
};

/// Executes every (detector, rep) pair. Non-deterministic detectors run
/// once per repetition with seed = mix(base_seed, detector.id, rep);
/// deterministic detectors execute once and the result is replicated, with
/// per-rep seeds still recorded. Results come back in (detector, rep)
/// order regardless of the worker count.
inline std::vector<DetectionRun> run_batch(const Graph& g,
                                           const std::vector<DetectorDescriptor>& detectors,
                                           std::uint32_t reps, std::uint64_t base_seed,
                                           const BatchOptions& opts = {}) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    for (const auto& d : detectors) {
        if (!d.deterministic && reps < 30 && !opts.force_reps)
            throw ProtocolError("detector " + d.id +
                                " is non-deterministic: the protocol requires at least 30 "
                                "repetitions (got " +
                                std::to_string(reps) + "); use the force-reps override to bypass");
    }

    struct Task {
        std::size_t detector_idx;
        std::uint32_t rep;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < detectors.size(); ++i) {
        if (detectors[i].deterministic)
            tasks.push_back({i, 0});
        else
            for (std::uint32_t r = 0; r < reps; ++r) tasks.push_back({i, r});
    }

    std::vector<DetectionRun> executed(tasks.size());
    unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size() ? tasks.size() : 1));

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            while (true) {
                std::size_t t = cursor.fetch_add(1);
                if (t >= tasks.size()) break;
                const auto& d = detectors[tasks[t].detector_idx];
                std::uint64_t seed = mix_seed(base_seed, d.id, tasks[t].rep);
                DetectOptions dopts;
                dopts.allow_slow = opts.allow_slow;
                DetectionRun run = detect(g, d, seed, dopts);
                run.rep = tasks[t].rep;
                executed[t] = std::move(run);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            cursor.store(tasks.size());
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // expand deterministic executions into per-rep records
    std::vector<DetectionRun> out;
    out.reserve(detectors.size() * reps);
    std::size_t t = 0;
    for (std::size_t i = 0; i < detectors.size(); ++i) {
        if (detectors[i].deterministic) {
            const DetectionRun& base = executed[t++];
            for (std::uint32_t r = 0; r < reps; ++r) {
                DetectionRun rep_run = base;
                rep_run.rep = r;
                rep_run.seed = mix_seed(base_seed, detectors[i].id, r);
                out.push_back(std::move(rep_run));
            }
        } else {
            for (std::uint32_t r = 0; r < reps; ++r) out.push_back(executed[t++]);
        }
    }
    return out;
}

} // namespace commeval

#endif // COMMEVAL_DETECT_DETECTORS_HPP_
