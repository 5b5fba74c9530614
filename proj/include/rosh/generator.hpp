#pragma once

#include <cstdint>

#include "rosh/model.hpp"

namespace rosh {

struct Range {
    Time lo = 0;
    Time hi = 0;
};

struct GeneratorConfig {
    std::uint64_t seed = 1;
    Range nodes{1, 6};
    Range tau{0, 5};
    Range jobs_per_node{1, 3};  // non-depot nodes
    Range depot_jobs{0, 3};
    Range duration{0, 10};
    std::size_t max_jobs = 0;  // 0: unlimited
};

// Throws InputError for empty or negative ranges, for jobs_per_node.lo < 1 and
// for a job limit below the number of non-depot nodes.
void check_config(const GeneratorConfig& cfg);

// Node k > 0 attaches to a uniformly chosen earlier node. Nodes are named v0.. with
// v0 the depot, jobs J1.. in node order. Identical configs give identical instances.
Instance gen_random(const GeneratorConfig& cfg);

}  // namespace rosh
