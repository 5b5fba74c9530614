#include "rosh/classify.hpp"

#include <algorithm>
#include <unordered_set>

#include "rosh/reduction.hpp"

namespace rosh {

namespace {

bool irreducible(const std::array<Time, 3>& sums, Time budget) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (sums[i] > budget) return false;
        for (std::size_t k = i + 1; k < 3; ++k)
            if (sums[i] + sums[k] <= budget) return false;
    }
    return true;
}

}  // namespace

std::vector<Time> subtree_weights(const Instance& inst) {
    const auto& net = inst.network();
    const auto m = metrics(inst);
    std::vector<Time> w = m.node_load;
    const auto& order = net.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeIndex v = *it;
        if (v == net.depot()) continue;
        w[net.parent(v)] += w[v] + 4 * net.parent_tau(v);
    }
    return w;
}

Time subtree_weight(const Instance& inst, std::string_view root) {
    const NodeIndex v = inst.network().index_of(root);
    return subtree_weights(inst)[v];
}

Theorem5Verdict check_theorem5(const Instance& inst) {
    const auto& net = inst.network();
    const auto m = metrics(inst);
    const Time R = m.lower_bound;
    const auto W = subtree_weights(inst);
    auto budget = [&](NodeIndex v) { return R - 2 * net.depth(v); };

    Theorem5Verdict out;
    out.condition1 = m.node_load[net.depot()] > R;

    out.condition2 = true;
    for (NodeIndex c : net.children(net.depot()))
        if (W[c] > budget(c)) out.condition2 = false;

    for (NodeIndex v = 0; v < net.node_count() && !out.condition3; ++v) {
        if (v == net.depot()) continue;
        if (W[v] > budget(v) - 2 * net.parent_tau(v) && W[v] <= budget(v))
            out.condition3 = std::make_pair(net.name(net.parent(v)), net.name(v));
    }

    for (NodeIndex v = 0; v < net.node_count() && !out.condition4; ++v) {
        if (v == net.depot()) continue;
        Time M = m.node_dmax[v];
        bool children_fit = true;
        for (NodeIndex u : net.children(v)) {
            children_fit = children_fit && W[u] <= budget(u);
            M = std::max(M, W[u] + 4 * net.parent_tau(u));
        }
        if (children_fit && 2 * W[v] > 3 * budget(v) + 2 * M) out.condition4 = net.name(v);
    }

    out.any = out.condition1 || out.condition2 || out.condition3 || out.condition4;

    if (out.condition4) {
        const ReductionResult red = reduce(inst);
        const auto& res = red.resolution;
        if (red.outcome != Outcome::overloaded_node_three_jobs || !res.node) {
            out.partition_deviation = true;
        } else {
            const PartitionSets sets = partition_lengths_v2(res.lengths, res.budget);
            std::array<Time, 3> sums{};
            for (std::size_t s = 0; s < 3; ++s)
                for (std::size_t pos : sets[s]) sums[s] += res.lengths[pos];
            out.partition_deviation = !irreducible(sums, res.budget);
        }
    }
    return out;
}

bool superoverload_certificate(const Instance& inst, std::string_view node,
                               const std::array<std::vector<std::string>, 3>& parts) {
    const NodeIndex v = inst.network().index_of(node);
    std::unordered_set<JobIndex> seen;
    std::array<Time, 3> sums{};
    for (std::size_t s = 0; s < 3; ++s) {
        for (const auto& id : parts[s]) {
            const JobIndex j = inst.job_index(id);
            if (inst.job(j).node != v)
                throw InputError("job '" + id + "' is not located at '" + std::string(node) + "'");
            if (!seen.insert(j).second) throw InputError("job '" + id + "' appears in two parts");
            sums[s] += inst.job(j).length();
        }
    }
    if (seen.size() != inst.jobs_at(v).size()) throw InputError("parts do not cover every job at the node");
    return irreducible(sums, node_budget(inst, lower_bound(inst), v));
}

}  // namespace rosh
