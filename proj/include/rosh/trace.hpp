#pragma once

// Log of the aggregations and contractions performed by the reduction, with
// enough data to replay them forward and to expand schedules backward.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "rosh/schedule.hpp"

namespace rosh {

using Durations = std::array<Time, 2>;
using JobHandle = std::size_t;

struct AggregateRecord {
    std::string node;
    std::vector<std::string> parts;  // merge order
    std::vector<Durations> part_p;
    std::string result;
    Durations p{};

    bool operator==(const AggregateRecord&) const = default;
};

struct ContractRecord {
    std::string from;  // removed terminal node
    std::string to;    // node receiving the job
    Time tau = 0;
    std::string job;
    Durations before{};
    Durations after{};

    bool operator==(const ContractRecord&) const = default;
};

using StepRecord = std::variant<AggregateRecord, ContractRecord>;

/// Jobs are tracked by handle: handles 0..n-1 are the original jobs in instance
/// order, every aggregation creates a new handle, a contraction keeps the handle
/// of the moved job. The id of an aggregated job is the comma-joined ids of its
/// parts ordered by their first original job; ids are materialized on demand so
/// that long merge chains stay linear.
class ReductionTrace {
public:
    ReductionTrace() = default;
    explicit ReductionTrace(const Instance& original);

    JobHandle add_aggregate(NodeIndex node, std::vector<JobHandle> parts,
                            std::vector<Durations> part_p);
    void add_contract(JobHandle job, NodeIndex from, NodeIndex to, Time tau, Durations before);
    void set_final(std::vector<JobHandle> jobs) { final_ = std::move(jobs); }

    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    StepRecord record(std::size_t step) const;
    std::vector<StepRecord> records() const;

    std::string job_id(JobHandle h) const;
    // Smallest original job index merged into h; orders jobs like the instance does.
    std::size_t key(JobHandle h) const { return key_.at(h); }
    std::size_t original_job_count() const noexcept { return original_ids_.size(); }
    const std::vector<JobHandle>& final_jobs() const noexcept { return final_; }
    std::vector<std::string> final_ids() const;

    // Rebuilds a trace from its records, resolving job ids against `original`.
    static ReductionTrace from_records(const Instance& original,
                                       const std::vector<StepRecord>& records,
                                       const std::vector<std::string>& final_ids);

    // Reverse replay: maps a schedule of the reduced instance onto the original
    // jobs. Throws TraceError when the schedule does not match the trace.
    std::vector<ScheduledOperation> expand_operations(const std::vector<ScheduledOperation>& ops) const;

private:
    struct Aggregate {
        NodeIndex node;
        JobHandle result;
        std::vector<Durations> part_p;
    };
    struct Contract {
        JobHandle job;
        NodeIndex from;
        NodeIndex to;
        Time tau;
        Durations before;
    };

    std::vector<std::string> original_ids_;
    std::vector<std::string> node_names_;
    std::vector<std::vector<JobHandle>> children_;
    std::vector<std::size_t> key_;
    std::vector<std::variant<Aggregate, Contract>> steps_;
    std::vector<JobHandle> final_;
};

}  // namespace rosh
