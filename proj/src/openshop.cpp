#include "rosh/openshop.hpp"

#include <algorithm>

namespace rosh {

namespace {

Time min_op(const Job& job) { return std::min(job.a(), job.b()); }

JobIndex checked_diagonal(const Instance& inst, std::optional<JobIndex> diagonal) {
    const DiagonalInfo info = diagonal_job(inst);
    if (!diagonal) return info.job;
    if (*diagonal >= inst.job_count()) throw InputError("diagonal job index out of range");
    if (min_op(inst.job(*diagonal)) != min_op(inst.job(info.job)))
        throw PreconditionError("job '" + inst.job(*diagonal).id + "' is not a diagonal job");
    return *diagonal;
}

Schedule swap_back(Schedule sched) {
    for (auto& op : sched.operations) op.machine = other(op.machine);
    std::swap(sched.release[0], sched.release[1]);
    return sched;
}

Schedule build_chain(const Instance& inst, JobIndex pivot, ChainLayout layout) {
    const auto chain = chain_from_depot(inst.network());
    const DiagonalInfo parts = diagonal_job(inst);
    std::vector<bool> in_a(inst.job_count(), false);
    for (JobIndex j : parts.set_a) in_a[j] = true;

    std::vector<JobIndex> first;
    std::vector<JobIndex> second;
    first.reserve(inst.job_count());
    second.reserve(inst.job_count());

    auto append = [&](std::vector<JobIndex>& seq, NodeIndex v, auto keep) {
        for (JobIndex j : inst.jobs_at(v))
            if (j != pivot && keep(j)) seq.push_back(j);
    };
    auto any = [](JobIndex) { return true; };

    switch (layout) {
        case ChainLayout::outward_then_home: {
            for (NodeIndex v : chain) append(first, v, [&](JobIndex j) { return in_a[j]; });
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                append(first, *it, [&](JobIndex j) { return !in_a[j]; });
            second.push_back(pivot);
            second.insert(second.end(), first.begin(), first.end());
            first.push_back(pivot);
            break;
        }
        case ChainLayout::diagonal_pivot: {
            for (NodeIndex v : chain) append(first, v, any);
            first.push_back(pivot);
            second.push_back(pivot);
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) append(second, *it, any);
            break;
        }
    }

    Orientation orientation(inst.job_count(), Machine::first);
    orientation[pivot] = Machine::second;
    return build_early(inst, scheme_from_sequences(inst, first, second, orientation));
}

}  // namespace

DiagonalInfo diagonal_job(const Instance& inst) {
    if (inst.job_count() == 0) throw PreconditionError("instance has no jobs");
    DiagonalInfo info;
    for (JobIndex j = 0; j < inst.job_count(); ++j) {
        const auto& job = inst.job(j);
        (job.a() <= job.b() ? info.set_a : info.set_b).push_back(j);
        if (min_op(job) > min_op(inst.job(info.job))) info.job = j;
    }
    info.in_set_a = inst.job(info.job).a() <= inst.job(info.job).b();
    return info;
}

std::vector<JobIndex> diagonal_candidates(const Instance& inst) {
    std::vector<JobIndex> out;
    if (inst.job_count() == 0) return out;
    const Time best = min_op(inst.job(diagonal_job(inst).job));
    for (JobIndex j = 0; j < inst.job_count(); ++j)
        if (min_op(inst.job(j)) == best) out.push_back(j);
    return out;
}

Schedule gs_chain_schedule(const Instance& inst, JobIndex pivot, ChainLayout layout) {
    if (pivot >= inst.job_count()) throw InputError("pivot job index out of range");
    const auto& job = inst.job(pivot);
    if (job.a() > job.b()) return swap_back(build_chain(swap_machines(inst), pivot, layout));
    return build_chain(inst, pivot, layout);
}

Schedule gonzalez_sahni(const Instance& inst) {
    if (inst.network().node_count() != 1)
        throw PreconditionError("Gonzalez-Sahni needs a single-node network");
    const DiagonalInfo info = diagonal_job(inst);
    return gs_chain_schedule(inst, info.job, ChainLayout::outward_then_home);
}

Schedule chain_case1(const Instance& inst, std::optional<JobIndex> diagonal) {
    chain_from_depot(inst.network());
    const JobIndex r = checked_diagonal(inst, diagonal);
    if (inst.job(r).node != inst.network().depot())
        throw PreconditionError("diagonal job is not located at the depot");
    return gs_chain_schedule(inst, r, ChainLayout::outward_then_home);
}

Schedule chain_case2(const Instance& inst, std::optional<JobIndex> diagonal) {
    const auto chain = chain_from_depot(inst.network());
    const JobIndex r = checked_diagonal(inst, diagonal);
    if (inst.job(r).node != chain.back())
        throw PreconditionError("diagonal job is not located at the far end of the chain");
    const auto m = metrics(inst);
    if (inst.job(r).length() < m.load_max)
        throw PreconditionError("diagonal job is shorter than the maximal machine load");
    return gs_chain_schedule(inst, r, ChainLayout::diagonal_pivot);
}

}  // namespace rosh
