#pragma once

// Two-machine open shop machinery: the diagonal job, the Gonzalez-Sahni
// construction for a single node and its two extensions to chains.

#include <optional>
#include <vector>

#include "rosh/schedule.hpp"

namespace rosh {

struct DiagonalInfo {
    JobIndex job = 0;
    bool in_set_a = false;     // a <= b for the diagonal job
    std::vector<JobIndex> set_a;  // jobs with a <= b, instance order
    std::vector<JobIndex> set_b;  // jobs with a > b, instance order
};

// argmax_j min(a_j, b_j), lowest index on ties. Throws PreconditionError when
// the instance has no jobs.
DiagonalInfo diagonal_job(const Instance& inst);

// Every job maximizing min(a_j, b_j), in instance order.
std::vector<JobIndex> diagonal_candidates(const Instance& inst);

// Normal schedule for an instance whose network is the depot alone.
Schedule gonzalez_sahni(const Instance& inst);

// Chain with the depot at one end and the diagonal job at the depot. The
// diagonal defaults to diagonal_job(inst); any maximizer of min(a_j, b_j) works.
Schedule chain_case1(const Instance& inst, std::optional<JobIndex> diagonal = std::nullopt);

// Chain with the depot at one end, the diagonal job at the opposite end and
// d_r >= l_max.
Schedule chain_case2(const Instance& inst, std::optional<JobIndex> diagonal = std::nullopt);

enum class ChainLayout {
    // M1: J_A(v0..vg), J_B(vg..v0), a_r;  M2: b_r, same block order.
    outward_then_home,
    // M1: J(v0..vg) without r, a_r;  M2: b_r, J(vg..v0) without r.
    diagonal_pivot,
};

// Gonzalez-Sahni style early schedule on a chain for an arbitrary choice of the
// pivot job, without checking any normality precondition. The result is always
// feasible; it is normal under the preconditions of chain_case1/chain_case2.
Schedule gs_chain_schedule(const Instance& inst, JobIndex pivot, ChainLayout layout);

}  // namespace rosh
