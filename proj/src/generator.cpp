#include "rosh/generator.hpp"

#include <algorithm>
#include <random>

namespace rosh {

namespace {

// Modulo draw rather than std::uniform_int_distribution so that output does not
// depend on the standard library implementation.
Time draw(std::mt19937_64& rng, Range r) {
    const auto span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
    return r.lo + static_cast<Time>(rng() % span);
}

void check_range(Range r, const char* name) {
    if (r.lo < 0 || r.hi < r.lo)
        throw InputError(std::string(name) + ": range must satisfy 0 <= lo <= hi");
}

}  // namespace

void check_config(const GeneratorConfig& cfg) {
    check_range(cfg.nodes, "nodes");
    check_range(cfg.tau, "tau");
    check_range(cfg.jobs_per_node, "jobs_per_node");
    check_range(cfg.depot_jobs, "depot_jobs");
    check_range(cfg.duration, "duration");
    if (cfg.nodes.lo < 1) throw InputError("nodes: at least one node is required");
    if (cfg.jobs_per_node.lo < 1) throw InputError("jobs_per_node: every non-depot node needs a job");
    if (cfg.max_jobs != 0 && static_cast<Time>(cfg.max_jobs) < cfg.nodes.hi - 1)
        throw InputError("max_jobs is below the number of non-depot nodes");
}

Instance gen_random(const GeneratorConfig& cfg) {
    check_config(cfg);
    std::mt19937_64 rng(cfg.seed);
    const auto count = static_cast<std::size_t>(draw(rng, cfg.nodes));

    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t k = 0; k < count; ++k) names.push_back("v" + std::to_string(k));
    std::vector<EdgeSpec> edges;
    edges.reserve(count);
    for (std::size_t k = 1; k < count; ++k) {
        const auto parent = static_cast<std::size_t>(rng() % k);
        edges.push_back({names[parent], names[k], draw(rng, cfg.tau)});
    }

    std::vector<Job> jobs;
    std::size_t used = 0;
    for (std::size_t k = 0; k < count; ++k) {
        auto want = static_cast<std::size_t>(draw(rng, k == 0 ? cfg.depot_jobs : cfg.jobs_per_node));
        if (cfg.max_jobs != 0) {
            const std::size_t reserved = count - 1 - k;  // one per later node
            const std::size_t room = cfg.max_jobs - used - reserved;
            want = std::min(want, room);
            if (k > 0) want = std::max<std::size_t>(want, 1);
        }
        for (std::size_t i = 0; i < want; ++i) {
            const Time a = draw(rng, cfg.duration);
            const Time b = draw(rng, cfg.duration);
            jobs.push_back(Job{"J" + std::to_string(++used), k, {a, b}});
        }
    }
    return Instance(TreeNetwork(std::move(names), std::move(edges), "v0"), std::move(jobs));
}

}  // namespace rosh
