#include "rosh/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

namespace rosh {

namespace {

Time node_load(const Instance& inst, NodeIndex v) {
    Time sum = 0;
    for (JobIndex j : inst.jobs_at(v)) sum += inst.job(j).length();
    return sum;
}

// Child endpoint of edge (u, v), i.e. the one farther from the depot.
std::pair<NodeIndex, NodeIndex> orient_edge(const TreeNetwork& net, std::string_view u,
                                            std::string_view v) {
    const NodeIndex x = net.index_of(u);
    const NodeIndex y = net.index_of(v);
    if (net.parent(y) == x) return {x, y};
    if (net.parent(x) == y) return {y, x};
    throw InputError("no edge between '" + std::string(u) + "' and '" + std::string(v) + "'");
}

EdgeLoad edge_load(const Instance& inst, Time lower_bound, NodeIndex inner, NodeIndex leaf) {
    const auto& net = inst.network();
    if (leaf == net.depot() || net.degree(leaf) != 1 || inst.jobs_at(leaf).size() != 1)
        return EdgeLoad::not_applicable;
    const Time d = inst.job(inst.jobs_at(leaf).front()).length();
    return d + 4 * net.parent_tau(leaf) > node_budget(inst, lower_bound, inner) ? EdgeLoad::overloaded
                                                                                : EdgeLoad::underloaded;
}

std::string join(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ',';
        out += id;
    }
    return out;
}

}  // namespace

Time node_budget(const Instance& inst, Time lower_bound, NodeIndex v) {
    return lower_bound - 2 * inst.network().depth(v);
}

bool is_node_overloaded(const Instance& inst, std::string_view node) {
    const NodeIndex v = inst.network().index_of(node);
    return node_load(inst, v) > node_budget(inst, lower_bound(inst), v);
}

const char* to_string(EdgeLoad load) {
    switch (load) {
        case EdgeLoad::underloaded: return "underloaded";
        case EdgeLoad::overloaded: return "overloaded";
        case EdgeLoad::not_applicable: return "not_applicable";
    }
    return "unknown";
}

EdgeLoad is_edge_overloaded(const Instance& inst, std::string_view u, std::string_view v) {
    const auto [inner, leaf] = orient_edge(inst.network(), u, v);
    return edge_load(inst, lower_bound(inst), inner, leaf);
}

OverloadStatus overload_census(const Instance& inst) {
    const auto m = metrics(inst);
    const auto& net = inst.network();
    OverloadStatus status;
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        if (m.node_load[v] > node_budget(inst, m.lower_bound, v))
            status.overloaded_nodes.push_back(net.name(v));
        if (v == net.depot()) continue;
        if (edge_load(inst, m.lower_bound, net.parent(v), v) == EdgeLoad::overloaded)
            status.overloaded_edges.emplace_back(net.name(net.parent(v)), net.name(v));
    }
    return status;
}

AggregateResult aggregate(const Instance& inst, std::string_view node,
                          const std::vector<std::string>& ids, bool allow_invalid) {
    const auto& net = inst.network();
    const NodeIndex v = net.index_of(node);
    if (ids.size() < 2) throw PreconditionError("aggregation needs at least two jobs");
    std::vector<JobIndex> members;
    for (const auto& id : ids) {
        const JobIndex j = inst.job_index(id);
        if (inst.job(j).node != v)
            throw InputError("job '" + id + "' is not located at '" + std::string(node) + "'");
        members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw PreconditionError("aggregation lists a job twice");

    AggregateRecord rec;
    rec.node = std::string(node);
    for (JobIndex j : members) {
        const auto& job = inst.job(j);
        rec.parts.push_back(job.id);
        rec.part_p.push_back(job.p);
        rec.p[0] += job.p[0];
        rec.p[1] += job.p[1];
    }
    rec.result = join(rec.parts);
    if (!allow_invalid && rec.p[0] + rec.p[1] > node_budget(inst, lower_bound(inst), v))
        throw ValidityError("aggregating " + rec.result + " would raise the lower bound");

    std::vector<Job> jobs;
    jobs.reserve(inst.job_count() - members.size() + 1);
    std::size_t next = 0;
    for (JobIndex j = 0; j < inst.job_count(); ++j) {
        if (next < members.size() && members[next] == j) {
            if (next == 0) jobs.push_back(Job{rec.result, v, rec.p});
            ++next;
            continue;
        }
        jobs.push_back(inst.job(j));
    }
    return {Instance(net, std::move(jobs)), std::move(rec)};
}

ContractResult contract(const Instance& inst, std::string_view u, std::string_view v) {
    const auto& net = inst.network();
    const auto [inner, leaf] = orient_edge(net, u, v);
    const Time R = lower_bound(inst);
    const EdgeLoad load = edge_load(inst, R, inner, leaf);
    if (load == EdgeLoad::not_applicable)
        throw PreconditionError("edge is not terminal at a single-job node");
    if (load == EdgeLoad::overloaded)
        throw ValidityError("contracting an overloaded edge would raise the lower bound");

    const Time tau = net.parent_tau(leaf);
    std::vector<std::string> nodes;
    for (NodeIndex w = 0; w < net.node_count(); ++w)
        if (w != leaf) nodes.push_back(net.name(w));
    std::vector<EdgeSpec> edges;
    for (const auto& link : net.links()) {
        if (link.u == leaf || link.v == leaf) continue;
        edges.push_back({net.name(link.u), net.name(link.v), link.tau});
    }
    TreeNetwork reduced_net(std::move(nodes), std::move(edges), net.name(net.depot()));

    const JobIndex moved = inst.jobs_at(leaf).front();
    ContractRecord rec{net.name(leaf), net.name(inner), tau, inst.job(moved).id, inst.job(moved).p, {}};
    std::vector<Job> jobs;
    jobs.reserve(inst.job_count());
    for (JobIndex j = 0; j < inst.job_count(); ++j) {
        Job job = inst.job(j);
        NodeIndex where = job.node;
        if (j == moved) {
            where = inner;
            job.p[0] += 2 * tau;
            job.p[1] += 2 * tau;
            rec.after = job.p;
        }
        job.node = reduced_net.index_of(net.name(where));
        jobs.push_back(std::move(job));
    }
    return {Instance(std::move(reduced_net), std::move(jobs)), std::move(rec)};
}

PartitionSets partition_lengths(std::span<const Time> lengths, Time budget) {
    const std::size_t k = lengths.size();
    if (k < 3) throw PreconditionError("Partition needs at least three jobs");
    for (Time d : lengths)
        if (2 * d > budget) throw PreconditionError("Partition needs every job length within half the budget");

    Time sum = lengths[0];
    std::size_t x = 1;
    while (x < k && 2 * (sum + lengths[x]) <= budget) sum += lengths[x++];
    if (x == k) throw PreconditionError("Partition: first threshold is never exceeded");
    sum += lengths[x++];
    const Time first = sum;

    Time second = 0;
    std::size_t y = x;
    while (y < k && second + lengths[y] <= budget - first) second += lengths[y++];
    if (y == k) throw PreconditionError("Partition: second threshold is never exceeded");
    ++y;

    PartitionSets sets;
    for (std::size_t i = 0; i < k; ++i) sets[i < x ? 0 : (i < y ? 1 : 2)].push_back(i);
    return sets;
}

PartitionSets partition_lengths_v2(std::span<const Time> lengths, Time budget) {
    const std::size_t k = lengths.size();
    if (k < 2) throw PreconditionError("partition needs at least two jobs");
    PartitionSets sets;

    std::vector<std::size_t> order;
    order.reserve(k);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i) {
        const bool is_long = 2 * lengths[i] > budget;
        (is_long && order.size() < 2 ? order : rest).push_back(i);
    }
    order.insert(order.end(), rest.begin(), rest.end());
    const Time dmax = *std::max_element(lengths.begin(), lengths.end());

    // Step 1: minimal x > 1 with 2 * prefix > budget + dmax, else x = k.
    std::size_t x = std::min<std::size_t>(2, k);
    Time prefix = 0;
    for (std::size_t i = 0; i < x; ++i) prefix += lengths[order[i]];
    while (x < k && 2 * prefix <= budget + dmax) prefix += lengths[order[x++]];
    sets[0].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(x));
    if (x == k) return sets;

    // Step 2: minimal y > x with the block sum > budget + dmax - X, else y = k.
    const Time limit = budget + dmax - prefix;
    std::size_t y = x;
    Time block = 0;
    while (y < k) {
        block += lengths[order[y++]];
        if (block > limit) break;
    }
    sets[1].assign(order.begin() + static_cast<std::ptrdiff_t>(x),
                   order.begin() + static_cast<std::ptrdiff_t>(y));
    if (y == k) return sets;
    sets[2].assign(order.begin() + static_cast<std::ptrdiff_t>(y), order.end());
    return sets;
}

namespace {

std::vector<Time> lengths_at(const Instance& inst, NodeIndex v) {
    std::vector<Time> out;
    for (JobIndex j : inst.jobs_at(v)) out.push_back(inst.job(j).length());
    return out;
}

std::array<std::vector<JobIndex>, 3> to_jobs(const Instance& inst, NodeIndex v, const PartitionSets& sets) {
    const auto at = inst.jobs_at(v);
    std::array<std::vector<JobIndex>, 3> out;
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t pos : sets[s]) out[s].push_back(at[pos]);
    return out;
}

}  // namespace

std::array<std::vector<JobIndex>, 3> partition_v1(const Instance& inst, std::string_view node) {
    const NodeIndex v = inst.network().index_of(node);
    const auto lengths = lengths_at(inst, v);
    return to_jobs(inst, v, partition_lengths(lengths, node_budget(inst, lower_bound(inst), v)));
}

std::array<std::vector<JobIndex>, 3> partition_v2(const Instance& inst, std::string_view node) {
    const NodeIndex v = inst.network().index_of(node);
    const Time R = lower_bound(inst);
    if (node_load(inst, v) <= node_budget(inst, R, v))
        throw PreconditionError("Partition 2.0 applies to an overloaded node");
    const auto lengths = lengths_at(inst, v);
    return to_jobs(inst, v, partition_lengths_v2(lengths, node_budget(inst, R, v)));
}

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::single_node: return "SingleNode";
        case Outcome::overloaded_node_two_jobs: return "OverloadedNodeTwoJobs";
        case Outcome::overloaded_node_three_jobs: return "OverloadedNodeThreeJobs";
        case Outcome::overloaded_edge: return "OverloadedEdge";
    }
    return "unknown";
}

const char* to_string(PartitionProcedure p) {
    switch (p) {
        case PartitionProcedure::none: return "none";
        case PartitionProcedure::partition: return "partition";
        case PartitionProcedure::partition_v2: return "partition_v2";
    }
    return "unknown";
}

namespace {

// Mutable working copy of an instance; jobs are addressed by trace handle.
class Reducer {
public:
    Reducer(const Instance& inst, const ReductionObserver& observer)
        : inst_(inst), net_(inst.network()), observer_(observer), trace_(inst) {
        R_ = lower_bound(inst);
        const std::size_t nodes = net_.node_count();
        at_.resize(nodes);
        load_.assign(nodes, 0);
        alive_.assign(nodes, true);
        degree_.resize(nodes);
        for (NodeIndex v = 0; v < nodes; ++v) degree_[v] = net_.degree(v);
        jobs_.reserve(2 * inst.job_count());
        for (JobIndex j = 0; j < inst.job_count(); ++j) {
            const auto& job = inst.job(j);
            jobs_.push_back({job.p, job.node});
            pos_.push_back(0);
            attach(job.node, j);
            load_[job.node] += job.length();
        }
    }

    ReductionResult run() {
        notify();
        aggregate_underloaded();
        contract_terminals();
        OverloadResolution resolution = resolve_overload();

        std::vector<JobHandle> final_jobs;
        Instance reduced = materialize(&final_jobs);
        trace_.set_final(std::move(final_jobs));
        const Outcome outcome = classify_outcome(reduced);
        return {std::move(reduced), std::move(trace_), outcome, std::move(resolution)};
    }

private:
    struct Work {
        Durations p;
        NodeIndex node;
    };

    Time budget(NodeIndex v) const { return R_ - 2 * net_.depth(v); }
    bool overloaded(NodeIndex v) const { return load_[v] > budget(v); }
    static Time length(const Work& w) { return w.p[0] + w.p[1]; }

    // Per-node job lists are unordered; pos_ makes removal constant time.
    void attach(NodeIndex v, JobHandle h) {
        pos_[h] = at_[v].size();
        at_[v].push_back(h);
    }
    void detach(JobHandle h) {
        auto& list = at_[jobs_[h].node];
        const JobHandle last = list.back();
        list[pos_[h]] = last;
        pos_[last] = pos_[h];
        list.pop_back();
    }

    void notify() {
        if (observer_) observer_(materialize(nullptr), trace_);
    }

    // Merges `parts` (all located at v) into one job.
    JobHandle merge(NodeIndex v, std::vector<JobHandle> parts) {
        std::sort(parts.begin(), parts.end(),
                  [&](JobHandle l, JobHandle r) { return trace_.key(l) < trace_.key(r); });
        std::vector<Durations> part_p;
        Durations sum{0, 0};
        for (JobHandle h : parts) {
            part_p.push_back(jobs_[h].p);
            sum[0] += jobs_[h].p[0];
            sum[1] += jobs_[h].p[1];
        }
        for (JobHandle p : parts) detach(p);
        const JobHandle h = trace_.add_aggregate(v, std::move(parts), std::move(part_p));
        jobs_.push_back({sum, v});
        pos_.push_back(0);
        attach(v, h);
        notify();
        return h;
    }

    void merge_all(NodeIndex v) {
        if (at_[v].size() >= 2) merge(v, at_[v]);
    }

    void aggregate_underloaded() {
        for (NodeIndex v = 0; v < net_.node_count(); ++v)
            if (!overloaded(v)) merge_all(v);
    }

    NodeIndex alive_neighbor(NodeIndex v, Time& tau) const {
        for (const auto& nb : net_.neighbors(v)) {
            if (alive_[nb.node]) {
                tau = nb.tau;
                return nb.node;
            }
        }
        return no_node;
    }

    // Contracts underloaded terminal edges until none is left. Leaves are taken
    // depth first so that a node which becomes terminal is handled next.
    void contract_terminals() {
        std::vector<NodeIndex> stack;
        for (NodeIndex v = net_.node_count(); v-- > 0;)
            if (v != net_.depot() && degree_[v] == 1) stack.push_back(v);
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            if (!alive_[v] || degree_[v] != 1 || at_[v].size() != 1) continue;
            Time tau = 0;
            const NodeIndex u = alive_neighbor(v, tau);
            const JobHandle h = at_[v].front();
            auto& job = jobs_[h];
            if (length(job) + 4 * tau > budget(u)) continue;  // overloaded edge

            const Durations before = job.p;
            job.p[0] += 2 * tau;
            job.p[1] += 2 * tau;
            detach(h);
            job.node = u;
            attach(u, h);
            load_[u] += load_[v] + 4 * tau;
            load_[v] = 0;
            alive_[v] = false;
            degree_[v] = 0;
            --degree_[u];
            trace_.add_contract(h, v, u, tau, before);
            notify();

            if (!overloaded(u)) merge_all(u);
            if (u != net_.depot() && degree_[u] == 1) stack.push_back(u);
        }
    }

    OverloadResolution resolve_overload() {
        OverloadResolution res;
        NodeIndex target = no_node;
        for (NodeIndex v = 0; v < net_.node_count(); ++v) {
            if (!alive_[v] || !overloaded(v)) continue;
            if (target != no_node) throw ConsistencyError("more than one overloaded node");
            target = v;
        }
        if (target == no_node) return res;

        std::vector<JobHandle> jobs = at_[target];
        std::sort(jobs.begin(), jobs.end(),
                  [&](JobHandle l, JobHandle r) { return trace_.key(l) < trace_.key(r); });
        const Time B = budget(target);
        res.node = net_.name(target);
        res.budget = B;
        Time total = 0;
        Time dmax = 0;
        bool all_short = true;
        for (JobHandle h : jobs) {
            const Time d = length(jobs_[h]);
            res.lengths.push_back(d);
            total += d;
            dmax = std::max(dmax, d);
            all_short = all_short && 2 * d <= B;
        }

        // The original procedure guarantees an irreducible split whenever its
        // sufficient condition holds; Partition 2.0 covers everything else.
        res.procedure = PartitionProcedure::partition_v2;
        if (jobs.size() >= 3 && all_short && 2 * total > 3 * B + 2 * dmax) {
            try {
                res.sets = partition_lengths(res.lengths, B);
                res.procedure = PartitionProcedure::partition;
            } catch (const PreconditionError&) {
            }
        }
        if (res.procedure == PartitionProcedure::partition_v2)
            res.sets = partition_lengths_v2(res.lengths, B);

        for (std::size_t s = 0; s < 3; ++s) {
            const auto& set = res.sets[s];
            if (set.size() < 2) continue;
            Time sum = 0;
            std::vector<JobHandle> parts;
            for (std::size_t pos : set) {
                sum += res.lengths[pos];
                parts.push_back(jobs[pos]);
            }
            if (sum > B) {
                res.guarded[s] = true;
                continue;
            }
            merge(target, std::move(parts));
        }

        // Merge the two shortest jobs while that keeps the bound.
        using Entry = std::tuple<Time, std::size_t, JobHandle>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> shortest;
        for (JobHandle h : at_[target]) shortest.emplace(length(jobs_[h]), trace_.key(h), h);
        while (shortest.size() >= 2) {
            const Entry first = shortest.top();
            shortest.pop();
            const Entry second = shortest.top();
            if (std::get<0>(first) + std::get<0>(second) > B) break;
            shortest.pop();
            const JobHandle h = merge(target, {std::get<2>(first), std::get<2>(second)});
            shortest.emplace(length(jobs_[h]), trace_.key(h), h);
            ++res.merges;
        }
        return res;
    }

    Instance materialize(std::vector<JobHandle>* handles) const {
        std::vector<std::string> nodes;
        std::vector<NodeIndex> remap(net_.node_count(), no_node);
        for (NodeIndex v = 0; v < net_.node_count(); ++v) {
            if (!alive_[v]) continue;
            remap[v] = nodes.size();
            nodes.push_back(net_.name(v));
        }
        std::vector<EdgeSpec> edges;
        for (const auto& link : net_.links())
            if (alive_[link.u] && alive_[link.v])
                edges.push_back({net_.name(link.u), net_.name(link.v), link.tau});

        std::vector<JobHandle> live;
        for (NodeIndex v = 0; v < net_.node_count(); ++v)
            if (alive_[v]) live.insert(live.end(), at_[v].begin(), at_[v].end());
        std::sort(live.begin(), live.end(),
                  [&](JobHandle l, JobHandle r) { return trace_.key(l) < trace_.key(r); });

        std::vector<Job> jobs;
        jobs.reserve(live.size());
        for (JobHandle h : live) jobs.push_back(Job{trace_.job_id(h), remap[jobs_[h].node], jobs_[h].p});
        if (handles) *handles = live;
        return Instance(TreeNetwork(std::move(nodes), std::move(edges), net_.name(net_.depot())),
                        std::move(jobs));
    }

    Outcome classify_outcome(const Instance& reduced) const {
        const auto m = metrics(reduced);
        if (m.lower_bound != R_) throw ConsistencyError("reduction changed the lower bound");
        const auto& net = reduced.network();
        if (net.node_count() == 1) return Outcome::single_node;
        const auto chain = chain_from_depot(net);
        const NodeIndex far = chain.back();
        const OverloadStatus status = overload_census(reduced);
        if (status.count() != 1) throw ConsistencyError("reduced chain has no unique overloaded object");
        if (!status.overloaded_nodes.empty()) {
            if (status.overloaded_nodes.front() != net.name(far))
                throw ConsistencyError("overloaded node is not the far end of the reduced chain");
            const std::size_t k = reduced.jobs_at(far).size();
            if (k == 2) return Outcome::overloaded_node_two_jobs;
            if (k == 3) return Outcome::overloaded_node_three_jobs;
            throw ConsistencyError("overloaded node keeps " + std::to_string(k) + " jobs");
        }
        if (status.overloaded_edges.front().second != net.name(far))
            throw ConsistencyError("overloaded edge is not terminal in the reduced chain");
        return Outcome::overloaded_edge;
    }

    const Instance& inst_;
    const TreeNetwork& net_;
    const ReductionObserver& observer_;
    ReductionTrace trace_;
    Time R_ = 0;
    std::vector<Work> jobs_;
    std::vector<std::size_t> pos_;
    std::vector<std::vector<JobHandle>> at_;
    std::vector<Time> load_;
    std::vector<bool> alive_;
    std::vector<std::size_t> degree_;
};

}  // namespace

ReductionResult reduce(const Instance& inst, const ReductionObserver& observer) {
    return Reducer(inst, observer).run();
}

Instance replay(const Instance& original, const ReductionTrace& trace) {
    Instance cur = original;
    for (const auto& rec : trace.records()) {
        if (const auto* agg = std::get_if<AggregateRecord>(&rec)) {
            cur = aggregate(cur, agg->node, agg->parts).instance;
        } else {
            const auto& con = std::get<ContractRecord>(rec);
            cur = contract(cur, con.to, con.from).instance;
        }
    }
    return cur;
}

Schedule expand(const Instance& original, const ReductionTrace& trace, const Schedule& reduced) {
    Schedule out;
    out.operations = trace.expand_operations(reduced.operations);
    update_release(original, out);
    return out;
}

}  // namespace rosh
