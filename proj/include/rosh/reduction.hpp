#pragma once

// Instance reduction: job aggregation, terminal edge contraction, node and edge
// overload predicates, the two partition procedures, the full reduction and the
// expansion of reduced schedules back to the original instance.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rosh/trace.hpp"

namespace rosh {

// Budget of node v: R - 2 dist(depot, v). Jobs at v may be merged while their
// total length stays within it.
Time node_budget(const Instance& inst, Time lower_bound, NodeIndex v);

bool is_node_overloaded(const Instance& inst, std::string_view node);

enum class EdgeLoad { underloaded, overloaded, not_applicable };

const char* to_string(EdgeLoad load);

// The edge must be terminal at a non-depot node holding a single job; otherwise
// the predicate does not apply.
EdgeLoad is_edge_overloaded(const Instance& inst, std::string_view u, std::string_view v);

struct OverloadStatus {
    std::vector<std::string> overloaded_nodes;
    std::vector<std::pair<std::string, std::string>> overloaded_edges;  // (inner, terminal)

    std::size_t count() const noexcept { return overloaded_nodes.size() + overloaded_edges.size(); }
};

OverloadStatus overload_census(const Instance& inst);

struct AggregateResult {
    Instance instance;
    AggregateRecord record;
};

// Replaces the jobs `ids` at `node` by one job with summed durations, placed at
// the position of the first of them. Throws ValidityError when the merged length
// exceeds the node budget and allow_invalid is false.
AggregateResult aggregate(const Instance& inst, std::string_view node,
                          const std::vector<std::string>& ids, bool allow_invalid = false);

struct ContractResult {
    Instance instance;
    ContractRecord record;
};

// Moves the single job of the terminal endpoint of edge (u, v) to the other
// endpoint, adding twice the edge weight to both operations, and deletes the
// terminal node. Throws PreconditionError when the edge is not contractible and
// ValidityError when it is overloaded.
ContractResult contract(const Instance& inst, std::string_view u, std::string_view v);

// Three consecutive blocks of positions into the input order.
using PartitionSets = std::array<std::vector<std::size_t>, 3>;

// Procedure Partition on job lengths in a fixed order. Requires every length at
// most budget/2 and at least three jobs; throws PreconditionError otherwise or
// when the thresholds are never exceeded.
PartitionSets partition_lengths(std::span<const Time> lengths, Time budget);

// Procedure Partition 2.0 on at least two jobs. Long jobs (length > budget/2)
// are moved to the front and the thresholds are shifted by the maximal length.
PartitionSets partition_lengths_v2(std::span<const Time> lengths, Time budget);

// Instance-level wrappers; sets hold instance job indices.
std::array<std::vector<JobIndex>, 3> partition_v1(const Instance& inst, std::string_view node);
std::array<std::vector<JobIndex>, 3> partition_v2(const Instance& inst, std::string_view node);

enum class Outcome {
    single_node,
    overloaded_node_two_jobs,
    overloaded_node_three_jobs,
    overloaded_edge,
};

const char* to_string(Outcome outcome);

enum class PartitionProcedure { none, partition, partition_v2 };

const char* to_string(PartitionProcedure p);

// What the overload-resolution stage did.
struct OverloadResolution {
    std::optional<std::string> node;
    Time budget = 0;
    std::vector<Time> lengths;  // jobs at the node before partitioning, instance order
    PartitionProcedure procedure = PartitionProcedure::none;
    PartitionSets sets;
    std::array<bool, 3> guarded{};  // set left unmerged because it exceeds the budget
    std::size_t merges = 0;         // pairwise merges of the two shortest jobs
};

struct ReductionResult {
    Instance reduced;
    ReductionTrace trace;
    Outcome outcome;
    OverloadResolution resolution;
};

// Called with the initial instance and after every aggregation or contraction.
using ReductionObserver = std::function<void(const Instance& current, const ReductionTrace& trace)>;

ReductionResult reduce(const Instance& inst, const ReductionObserver& observer = {});

// Replays the trace forward with aggregate()/contract().
Instance replay(const Instance& original, const ReductionTrace& trace);

// Maps a schedule of the reduced instance to the original instance. Aggregated
// intervals are split into consecutive parts in merge order; a contracted
// operation becomes travel, the original operation and travel back.
Schedule expand(const Instance& original, const ReductionTrace& trace, const Schedule& reduced);

}  // namespace rosh
