#include "rosh/model.hpp"

#include <algorithm>
#include <queue>

namespace rosh {

TreeNetwork::TreeNetwork(std::vector<std::string> nodes, std::vector<EdgeSpec> edges,
                         std::string depot)
    : names_(std::move(nodes)) {
    if (names_.empty()) throw InputError("network has no nodes");
    index_.reserve(names_.size());
    for (NodeIndex i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw InputError("duplicate node id '" + names_[i] + "'");
    }
    auto dep = find(depot);
    if (!dep) throw InputError("depot '" + depot + "' is not a node");
    depot_ = *dep;

    if (edges.size() + 1 != names_.size()) throw InputError("not a tree: |E| must equal |V| - 1");
    adjacency_.resize(names_.size());
    links_.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        auto u = find(e.u);
        auto v = find(e.v);
        if (!u) throw InputError("edges[" + std::to_string(k) + "]: unknown node '" + e.u + "'");
        if (!v) throw InputError("edges[" + std::to_string(k) + "]: unknown node '" + e.v + "'");
        if (*u == *v) throw InputError("not a tree: edges[" + std::to_string(k) + "] is a loop");
        if (e.tau < 0) throw InputError("edges[" + std::to_string(k) + "]: negative travel time");
        links_.push_back({*u, *v, e.tau});
        adjacency_[*u].push_back({*v, e.tau});
        adjacency_[*v].push_back({*u, e.tau});
        total_weight_ += e.tau;
    }

    parent_.assign(names_.size(), no_node);
    parent_tau_.assign(names_.size(), 0);
    depth_.assign(names_.size(), 0);
    level_.assign(names_.size(), 0);
    std::vector<bool> seen(names_.size(), false);
    order_.reserve(names_.size());
    std::queue<NodeIndex> q;
    q.push(depot_);
    seen[depot_] = true;
    while (!q.empty()) {
        NodeIndex u = q.front();
        q.pop();
        order_.push_back(u);
        for (const auto& [w, tau] : adjacency_[u]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent_[w] = u;
            parent_tau_[w] = tau;
            depth_[w] = depth_[u] + tau;
            level_[w] = level_[u] + 1;
            q.push(w);
        }
    }
    // |E| = |V| - 1 and connected implies acyclic.
    if (order_.size() != names_.size()) throw InputError("not a tree: network is disconnected");
}

std::optional<NodeIndex> TreeNetwork::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeIndex TreeNetwork::index_of(std::string_view name) const {
    auto v = find(name);
    if (!v) throw InputError("unknown node '" + std::string(name) + "'");
    return *v;
}

std::vector<NodeIndex> TreeNetwork::children(NodeIndex v) const {
    std::vector<NodeIndex> out;
    for (const auto& nb : adjacency_.at(v))
        if (nb.node != parent_[v]) out.push_back(nb.node);
    return out;
}

Time TreeNetwork::distance(NodeIndex u, NodeIndex v) const {
    if (u >= names_.size() || v >= names_.size()) throw InputError("node index out of range");
    NodeIndex x = u;
    NodeIndex y = v;
    while (level_[x] > level_[y]) x = parent_[x];
    while (level_[y] > level_[x]) y = parent_[y];
    while (x != y) {
        x = parent_[x];
        y = parent_[y];
    }
    return depth_[u] + depth_[v] - 2 * depth_[x];
}

Instance::Instance(TreeNetwork network, std::vector<Job> jobs)
    : network_(std::move(network)), jobs_(std::move(jobs)) {
    at_.resize(network_.node_count());
    by_id_.reserve(jobs_.size());
    for (JobIndex j = 0; j < jobs_.size(); ++j) {
        const auto& job = jobs_[j];
        const std::string where = "jobs[" + std::to_string(j) + "]";
        if (job.node >= network_.node_count()) throw InputError(where + ": unknown node");
        if (job.p[0] < 0 || job.p[1] < 0) throw InputError(where + ": negative duration");
        if (!by_id_.emplace(job.id, j).second)
            throw InputError(where + ": duplicate job id '" + job.id + "'");
        at_[job.node].push_back(j);
    }
    for (NodeIndex v = 0; v < network_.node_count(); ++v) {
        if (v != network_.depot() && at_[v].empty())
            throw InputError("node '" + network_.name(v) + "' hosts no job");
    }
}

std::optional<JobIndex> Instance::find_job(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

JobIndex Instance::job_index(std::string_view id) const {
    auto j = find_job(id);
    if (!j) throw InputError("unknown job '" + std::string(id) + "'");
    return *j;
}

Job make_job(const TreeNetwork& net, std::string id, std::string_view node, Time a, Time b) {
    return Job{std::move(id), net.index_of(node), {a, b}};
}

Time distance(const TreeNetwork& net, std::string_view u, std::string_view v) {
    return net.distance(net.index_of(u), net.index_of(v));
}

Time tsp_optimum(const TreeNetwork& net) { return 2 * net.total_weight(); }

InstanceMetrics metrics(const Instance& inst) {
    const auto& net = inst.network();
    InstanceMetrics m;
    m.job_length.reserve(inst.job_count());
    m.node_load.assign(net.node_count(), 0);
    m.node_dmax.assign(net.node_count(), 0);
    for (const auto& job : inst.jobs()) {
        m.load1 += job.a();
        m.load2 += job.b();
        m.job_length.push_back(job.length());
        m.node_load[job.node] += job.length();
        m.node_dmax[job.node] = std::max(m.node_dmax[job.node], job.length());
    }
    m.load_max = std::max(m.load1, m.load2);
    m.total_load = m.load1 + m.load2;
    m.tsp_opt = tsp_optimum(net);
    m.lower_bound = m.load_max + m.tsp_opt;
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        if (inst.jobs_at(v).empty()) continue;
        m.lower_bound = std::max(m.lower_bound, m.node_dmax[v] + 2 * net.depth(v));
    }
    return m;
}

Time lower_bound(const Instance& inst) { return metrics(inst).lower_bound; }

std::vector<NodeIndex> chain_from_depot(const TreeNetwork& net) {
    const NodeIndex depot = net.depot();
    if (net.degree(depot) > 1) throw PreconditionError("depot is not a terminal node of a chain");
    std::vector<NodeIndex> chain{depot};
    NodeIndex prev = no_node;
    NodeIndex cur = depot;
    while (true) {
        NodeIndex next = no_node;
        for (const auto& nb : net.neighbors(cur)) {
            if (nb.node == prev) continue;
            if (next != no_node) throw PreconditionError("network is not a chain");
            next = nb.node;
        }
        if (next == no_node) break;
        chain.push_back(next);
        prev = cur;
        cur = next;
    }
    return chain;
}

Instance swap_machines(const Instance& inst) {
    std::vector<Job> jobs = inst.jobs();
    for (auto& job : jobs) std::swap(job.p[0], job.p[1]);
    return Instance(inst.network(), std::move(jobs));
}

}  // namespace rosh
