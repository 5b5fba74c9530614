#pragma once

// Tree transportation networks, two-machine routing open shop instances and
// the scalar quantities derived from them (loads, lengths, distances, lower bound).

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rosh/error.hpp"

namespace rosh {

using Time = std::int64_t;
using NodeIndex = std::size_t;
using JobIndex = std::size_t;

inline constexpr NodeIndex no_node = std::numeric_limits<NodeIndex>::max();

enum class Machine : int { first = 1, second = 2 };

constexpr std::size_t slot(Machine m) noexcept { return m == Machine::first ? 0 : 1; }
constexpr Machine other(Machine m) noexcept {
    return m == Machine::first ? Machine::second : Machine::first;
}
constexpr Machine machine_of_slot(std::size_t s) noexcept {
    return s == 0 ? Machine::first : Machine::second;
}

// Edge as written in an instance document.
struct EdgeSpec {
    std::string u;
    std::string v;
    Time tau = 0;
};

// Edge with resolved endpoints.
struct Link {
    NodeIndex u = no_node;
    NodeIndex v = no_node;
    Time tau = 0;
};

struct Neighbor {
    NodeIndex node;
    Time tau;
};

/// Edge-weighted tree with a distinguished depot.
///
/// Construction validates the tree invariants and roots the tree at the depot;
/// afterwards the network is immutable. Node names are opaque strings, indices
/// are dense and follow the order of the `nodes` argument.
class TreeNetwork {
public:
    TreeNetwork(std::vector<std::string> nodes, std::vector<EdgeSpec> edges, std::string depot);

    std::size_t node_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& node_names() const noexcept { return names_; }
    const std::string& name(NodeIndex v) const { return names_.at(v); }
    std::optional<NodeIndex> find(std::string_view name) const;
    NodeIndex index_of(std::string_view name) const;  // throws InputError

    NodeIndex depot() const noexcept { return depot_; }
    const std::vector<Link>& links() const noexcept { return links_; }
    std::span<const Neighbor> neighbors(NodeIndex v) const { return adjacency_.at(v); }
    std::size_t degree(NodeIndex v) const { return adjacency_.at(v).size(); }

    // Rooted view: parent toward the depot (no_node for the depot itself).
    NodeIndex parent(NodeIndex v) const { return parent_.at(v); }
    Time parent_tau(NodeIndex v) const { return parent_tau_.at(v); }
    // dist(depot, v)
    Time depth(NodeIndex v) const { return depth_.at(v); }
    // Nodes in breadth-first order from the depot; parents precede children.
    const std::vector<NodeIndex>& bfs_order() const noexcept { return order_; }
    std::vector<NodeIndex> children(NodeIndex v) const;

    Time distance(NodeIndex u, NodeIndex v) const;
    Time total_weight() const noexcept { return total_weight_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<Link> links_;
    std::vector<std::vector<Neighbor>> adjacency_;
    NodeIndex depot_ = no_node;
    std::vector<NodeIndex> parent_;
    std::vector<Time> parent_tau_;
    std::vector<Time> depth_;
    std::vector<std::size_t> level_;
    std::vector<NodeIndex> order_;
    Time total_weight_ = 0;
};

struct Job {
    std::string id;
    NodeIndex node = no_node;
    std::array<Time, 2> p{};  // p[slot(machine)]

    Time a() const noexcept { return p[0]; }
    Time b() const noexcept { return p[1]; }
    Time length() const noexcept { return p[0] + p[1]; }
    Time duration(Machine m) const noexcept { return p[slot(m)]; }
};

/// A network plus an ordered list of jobs. Every non-depot node hosts at least
/// one job and job ids are unique.
class Instance {
public:
    Instance(TreeNetwork network, std::vector<Job> jobs);

    const TreeNetwork& network() const noexcept { return network_; }
    const std::vector<Job>& jobs() const noexcept { return jobs_; }
    const Job& job(JobIndex j) const { return jobs_.at(j); }
    std::size_t job_count() const noexcept { return jobs_.size(); }
    std::span<const JobIndex> jobs_at(NodeIndex v) const { return at_.at(v); }

    std::optional<JobIndex> find_job(std::string_view id) const;
    JobIndex job_index(std::string_view id) const;  // throws InputError

    // dist(depot, location of j)
    Time job_depth(JobIndex j) const { return network_.depth(jobs_.at(j).node); }

private:
    TreeNetwork network_;
    std::vector<Job> jobs_;
    std::vector<std::vector<JobIndex>> at_;
    std::unordered_map<std::string, JobIndex> by_id_;
};

Job make_job(const TreeNetwork& net, std::string id, std::string_view node, Time a, Time b);

struct InstanceMetrics {
    Time load1 = 0;
    Time load2 = 0;
    Time load_max = 0;
    std::vector<Time> job_length;  // by job index
    std::vector<Time> node_load;   // by node index
    std::vector<Time> node_dmax;   // by node index, 0 for a jobless depot
    Time total_load = 0;
    Time tsp_opt = 0;
    Time lower_bound = 0;
};

Time distance(const TreeNetwork& net, std::string_view u, std::string_view v);

// On a tree every edge is traversed exactly twice by an optimal tour.
Time tsp_optimum(const TreeNetwork& net);

InstanceMetrics metrics(const Instance& inst);
Time lower_bound(const Instance& inst);

// Nodes of a chain ordered from the depot to the far terminal. Throws
// PreconditionError unless the network is a chain with the depot at one end.
std::vector<NodeIndex> chain_from_depot(const TreeNetwork& net);

// Same instance with the two machines exchanged.
Instance swap_machines(const Instance& inst);

}  // namespace rosh
