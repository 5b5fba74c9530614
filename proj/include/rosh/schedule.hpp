#pragma once

#include <array>
#include <string>
#include <vector>

#include "rosh/model.hpp"

namespace rosh {

struct ScheduledOperation {
    std::string job;
    Machine machine = Machine::first;
    Time start = 0;
    Time end = 0;

    bool operator==(const ScheduledOperation&) const = default;
};

struct Schedule {
    std::vector<ScheduledOperation> operations;
    std::array<Time, 2> release{};  // R_1, R_2
    Time makespan = 0;
};

// Recomputes release times and makespan of `sched` from its operations:
// R_i = max over operations of machine i of (end + dist(location, depot)).
void update_release(const Instance& inst, Schedule& sched);

/// Operation of job `job` on `machine`, addressed by instance job index.
struct OpKey {
    JobIndex job = 0;
    Machine machine = Machine::first;

    bool operator==(const OpKey&) const = default;
};

/// Partial order on operations with time lags. START and FINISH are the
/// auxiliary source and sink; an arc (x, y, lag) states that y cannot start
/// earlier than lag time units after x completes.
class PrecedenceScheme {
public:
    struct Endpoint {
        enum class Kind { start, op, finish } kind = Kind::start;
        OpKey op{};
    };
    struct Arc {
        Endpoint from;
        Endpoint to;
        Time lag = 0;
    };

    static Endpoint start() { return {Endpoint::Kind::start, {}}; }
    static Endpoint finish() { return {Endpoint::Kind::finish, {}}; }
    static Endpoint op(JobIndex j, Machine m) { return {Endpoint::Kind::op, {j, m}}; }

    void add_op(OpKey op) { ops_.push_back(op); }
    void add_arc(Endpoint from, Endpoint to, Time lag = 0) { arcs_.push_back({from, to, lag}); }

    const std::vector<OpKey>& ops() const noexcept { return ops_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

private:
    std::vector<OpKey> ops_;
    std::vector<Arc> arcs_;
};

/// Which operation of a job is processed first.
using Orientation = std::vector<Machine>;

/// Scheme of an early schedule determined by the job sequence of each machine and
/// by the processing order of each job. Machines start at the depot, travel along
/// shortest paths between consecutive locations and return to the depot.
PrecedenceScheme scheme_from_sequences(const Instance& inst, const std::vector<JobIndex>& first,
                                       const std::vector<JobIndex>& second,
                                       const Orientation& orientation);

/// The unique early schedule of `scheme`: every operation starts at the length of
/// the longest START path into it; the makespan is the longest START-FINISH path.
/// Throws SchemeError on a cycle and InputError when the scheme does not cover
/// every operation of the instance exactly once.
Schedule build_early(const Instance& inst, const PrecedenceScheme& scheme);

struct Violation {
    enum class Kind { overlap, depot_departure, travel, duration };
    Kind kind;
    std::string message;
};

struct Verdict {
    bool feasible = false;
    std::vector<Violation> violations;
    std::array<Time, 2> release{};
    Time makespan = 0;
    Time lower_bound = 0;
    bool normal = false;
};

/// Feasibility check of a complete schedule. Processing intervals are open, so
/// touching endpoints and zero-length operations never overlap. Throws
/// InputError when an operation is missing, duplicated, unknown or starts
/// before time zero.
Verdict validate(const Instance& inst, const Schedule& sched);

const char* to_string(Violation::Kind kind);

}  // namespace rosh
