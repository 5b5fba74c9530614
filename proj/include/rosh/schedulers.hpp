#pragma once

// Normal-schedule constructors for the reduced chain outcomes and the end-to-end
// solve pipeline.

#include <string>
#include <utility>

#include "rosh/openshop.hpp"
#include "rosh/reduction.hpp"

namespace rosh {

// Chain (v0..vg) with one job at every non-depot node, at most one at the depot,
// and an overloaded terminal edge [v(g-1), vg].
Schedule schedule_overloaded_edge(const Instance& inst);

// Labels of the three jobs at the far node after normalization, so that
// a_alpha <= min(a_gamma, b_gamma, b_alpha) holds on the (possibly swapped) machines.
struct TripleLabels {
    JobIndex alpha = 0;
    JobIndex beta = 0;
    JobIndex gamma = 0;
    bool swapped = false;
};

// Pairwise length sums of the three far-node jobs all exceed the node budget.
// Throws PreconditionError when the instance is not such a chain.
TripleLabels triple_labels(const Instance& inst);

// The two candidate schemes; at least one of them is normal.
std::pair<Schedule, Schedule> three_job_schedules(const Instance& inst);

// Chain with one job per node before vg and an irreducible triple at vg.
// Throws ConsistencyError if neither candidate is normal.
Schedule schedule_three_jobs(const Instance& inst);

enum class SolveStatus { normal, abnormal_fallback };

const char* to_string(SolveStatus status);

struct SolveReport {
    SolveStatus status = SolveStatus::normal;
    Schedule schedule;  // for the original instance
    Time lower_bound = 0;
    Time makespan = 0;
    Outcome outcome = Outcome::single_node;
    std::string scheduler_used;
    Time gap = 0;
};

struct SolveOptions {
    // Largest reduced instance handed to the brute-force solver in the fallback.
    std::size_t oracle_cap;
};

SolveOptions default_solve_options();

// reduce -> dispatch on the outcome -> expand -> validate. The two-job outcome
// tries both chain constructions and otherwise falls back to the oracle (small
// reduced instances) or the best heuristic chain schedule.
SolveReport solve(const Instance& inst, const SolveOptions& options = default_solve_options());

}  // namespace rosh
