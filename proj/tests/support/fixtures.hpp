#pragma once

// Hand-built instances and seeded instance families shared by the unit and
// acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "rosh/generator.hpp"
#include "rosh/model.hpp"

namespace fixtures {

using rosh::EdgeSpec;
using rosh::GeneratorConfig;
using rosh::Instance;
using rosh::Job;
using rosh::Time;
using rosh::TreeNetwork;

struct JobSpec {
    std::string id;
    std::string node;
    Time a;
    Time b;
};

inline Instance build(std::vector<std::string> nodes, std::vector<EdgeSpec> edges, const std::string& depot,
                      const std::vector<JobSpec>& jobs) {
    TreeNetwork net(std::move(nodes), std::move(edges), depot);
    std::vector<Job> list;
    for (const auto& j : jobs) list.push_back(rosh::make_job(net, j.id, j.node, j.a, j.b));
    return Instance(std::move(net), std::move(list));
}

// Nine-node worked example.
inline Instance sample() {
    return build({"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
                 {{"v1", "v2", 1}, {"v2", "v0", 1}, {"v0", "v3", 2}, {"v0", "v4", 2},
                  {"v4", "v5", 3}, {"v4", "v6", 1}, {"v6", "v7", 2}, {"v6", "v8", 2}},
                 "v0",
                 {{"J1", "v0", 1, 2}, {"J2", "v0", 3, 4}, {"J3", "v1", 4, 1}, {"J4", "v2", 1, 1},
                  {"J5", "v2", 1, 1}, {"J6", "v2", 1, 1}, {"J7", "v3", 2, 1}, {"J8", "v4", 5, 2},
                  {"J9", "v4", 1, 1}, {"J10", "v5", 2, 1}, {"J11", "v6", 3, 2}, {"J12", "v7", 1, 4},
                  {"J13", "v8", 2, 3}, {"J14", "v8", 1, 5}});
}

inline Instance single_node(const std::vector<std::pair<Time, Time>>& jobs) {
    std::vector<JobSpec> specs;
    for (std::size_t k = 0; k < jobs.size(); ++k)
        specs.push_back({"J" + std::to_string(k + 1), "v0", jobs[k].first, jobs[k].second});
    return build({"v0"}, {}, "v0", specs);
}

// Two-node chain with tau 1 and the given jobs per node.
inline Instance link(const std::vector<std::pair<Time, Time>>& depot, const std::vector<std::pair<Time, Time>>& far,
                     Time tau = 1) {
    std::vector<JobSpec> specs;
    int k = 0;
    for (auto [a, b] : depot) specs.push_back({"J" + std::to_string(k++), "v0", a, b});
    for (auto [a, b] : far) specs.push_back({"J" + std::to_string(k++), "v1", a, b});
    return build({"v0", "v1"}, {{"v0", "v1", tau}}, "v0", specs);
}

inline Instance oe1() { return link({{1, 1}}, {{10, 10}}); }
inline Instance gs1() { return single_node({{3, 1}, {1, 3}, {2, 2}}); }
inline Instance tj1() { return link({{1, 1}}, {{2, 3}, {3, 3}, {3, 2}}); }
inline Instance six_pairs() { return link({{1, 1}}, {{2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}); }

inline GeneratorConfig tree_config(std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    return cfg;
}

// At most four nodes and five jobs: small enough for the oracle.
inline GeneratorConfig tiny_config(std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.nodes = {1, 4};
    cfg.jobs_per_node = {1, 2};
    cfg.depot_jobs = {0, 2};
    cfg.tau = {0, 4};
    cfg.max_jobs = 5;
    return cfg;
}

// Copy of `inst` with the jobs at the node named `node` replaced.
inline Instance with_jobs_at(const Instance& inst, const std::string& node,
                             const std::vector<std::pair<Time, Time>>& jobs, const std::string& prefix) {
    const auto& net = inst.network();
    const auto v = net.index_of(node);
    std::vector<Job> list;
    for (const auto& job : inst.jobs())
        if (job.node != v) list.push_back(job);
    for (std::size_t k = 0; k < jobs.size(); ++k)
        list.push_back(Job{prefix + std::to_string(k + 1), v, {jobs[k].first, jobs[k].second}});
    return Instance(net, std::move(list));
}

// Families biased toward a particular reduced shape. Each takes a seed and
// returns a random tree instance; the caller filters by the reduced shape.
enum class Family { single_node, overloaded_edge, triple, depot_diagonal, far_diagonal };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::single_node: return "single-node";
        case Family::overloaded_edge: return "overloaded-edge";
        case Family::triple: return "three-jobs";
        case Family::depot_diagonal: return "chain-case1";
        case Family::far_diagonal: return "chain-case2";
    }
    return "?";
}

inline Instance biased(Family family, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(family));
    auto draw = [&](Time lo, Time hi) { return lo + static_cast<Time>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

    GeneratorConfig cfg = tree_config(seed);
    if (family == Family::single_node) {
        cfg.nodes = {1, 1};
        cfg.depot_jobs = {1, 8};
        return rosh::gen_random(cfg);
    }
    cfg.nodes = {2, 7};
    cfg.tau = {1, 4};
    Instance base = rosh::gen_random(cfg);
    const auto& net = base.network();
    const std::string leaf = net.name(net.node_count() - 1);  // the last node never has children
    Time other = rosh::tsp_optimum(net) + 1;
    for (const auto& job : base.jobs())
        if (job.node != net.node_count() - 1) other += job.length();

    switch (family) {
        case Family::overloaded_edge:
            return with_jobs_at(base, leaf, {{draw(other / 2, 2 * other), draw(other / 2, 2 * other)}}, "L");
        case Family::far_diagonal: {
            const Time x = draw(other, 3 * other);
            return with_jobs_at(base, leaf, {{x, draw(other, 3 * other)}}, "L");
        }
        case Family::triple: {
            const std::size_t k = static_cast<std::size_t>(draw(3, 6));
            const Time total = draw(6 * other, 9 * other);
            std::vector<std::pair<Time, Time>> jobs;
            for (std::size_t i = 0; i < k; ++i) {
                const Time len = total / static_cast<Time>(k) + draw(0, other / 2);
                const Time a = draw(len / 4, 3 * len / 4);
                jobs.push_back({a, len - a});
            }
            return with_jobs_at(base, leaf, jobs, "T");
        }
        case Family::depot_diagonal: {
            const Time x = draw(other / 4, other);
            const Instance big_leaf =
                with_jobs_at(base, leaf, {{draw(1, other), draw(1, other)}, {draw(1, other), draw(1, other)}}, "L");
            std::vector<Job> jobs = big_leaf.jobs();
            jobs.push_back(Job{"D", net.depot(), {x, x + draw(0, 2)}});
            return Instance(net, std::move(jobs));
        }
        case Family::single_node: break;
    }
    return base;
}

}  // namespace fixtures
