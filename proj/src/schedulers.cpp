#include "rosh/schedulers.hpp"

#include <algorithm>
#include <optional>

#include "rosh/oracle.hpp"

namespace rosh {

namespace {

Schedule swap_back(Schedule sched) {
    for (auto& op : sched.operations) op.machine = other(op.machine);
    std::swap(sched.release[0], sched.release[1]);
    return sched;
}

std::vector<JobIndex> jobs_on(const Instance& inst, const std::vector<NodeIndex>& nodes) {
    std::vector<JobIndex> out;
    for (NodeIndex v : nodes)
        for (JobIndex j : inst.jobs_at(v)) out.push_back(j);
    return out;
}

Schedule require_normal(Schedule sched, const Instance& inst, const char* what) {
    if (sched.makespan != lower_bound(inst))
        throw ConsistencyError(std::string(what) + " produced makespan " + std::to_string(sched.makespan) +
                               " above the lower bound " + std::to_string(lower_bound(inst)));
    return sched;
}

// Schemes S1 (alpha on M1 first) and S2 (alpha on M2 first) on an instance
// whose machines are already normalized.
Schedule triple_scheme(const Instance& inst, const TripleLabels& t, bool alpha_first) {
    auto chain = chain_from_depot(inst.network());
    chain.pop_back();
    const auto outward = jobs_on(inst, chain);
    std::vector<JobIndex> homeward(outward.rbegin(), outward.rend());

    std::vector<JobIndex> first =
        alpha_first ? std::vector<JobIndex>{t.alpha, t.beta, t.gamma} : std::vector<JobIndex>{t.beta, t.gamma, t.alpha};
    first.insert(first.end(), homeward.begin(), homeward.end());
    std::vector<JobIndex> second = outward;
    second.insert(second.end(), {t.gamma, t.alpha, t.beta});

    Orientation orientation(inst.job_count(), Machine::second);
    orientation[t.alpha] = alpha_first ? Machine::first : Machine::second;
    orientation[t.beta] = Machine::first;
    orientation[t.gamma] = Machine::second;
    return build_early(inst, scheme_from_sequences(inst, first, second, orientation));
}

}  // namespace

Schedule schedule_overloaded_edge(const Instance& inst) {
    const auto chain = chain_from_depot(inst.network());
    if (chain.size() < 2) throw PreconditionError("overloaded edge needs a chain with at least one edge");
    const auto& net = inst.network();
    const NodeIndex far = chain.back();
    if (is_edge_overloaded(inst, net.name(chain[chain.size() - 2]), net.name(far)) != EdgeLoad::overloaded)
        throw PreconditionError("terminal edge of the chain is not overloaded");

    const JobIndex last = inst.jobs_at(far).front();
    std::vector<NodeIndex> inner(chain.begin(), chain.end() - 1);
    std::vector<JobIndex> first = jobs_on(inst, inner);
    std::vector<JobIndex> second{last};
    second.insert(second.end(), first.rbegin(), first.rend());
    first.push_back(last);

    Orientation orientation(inst.job_count(), Machine::first);
    orientation[last] = Machine::second;
    return require_normal(build_early(inst, scheme_from_sequences(inst, first, second, orientation)), inst,
                          "overloaded-edge scheduler");
}

TripleLabels triple_labels(const Instance& inst) {
    const auto chain = chain_from_depot(inst.network());
    if (chain.size() < 2) throw PreconditionError("three-job scheduler needs the triple away from the depot");
    const NodeIndex far = chain.back();
    const auto at = inst.jobs_at(far);
    if (at.size() != 3) throw PreconditionError("far node must hold exactly three jobs");
    const Time B = node_budget(inst, lower_bound(inst), far);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = i + 1; k < 3; ++k)
            if (inst.job(at[i]).length() + inst.job(at[k]).length() <= B)
                throw PreconditionError("far-node jobs are not an irreducible triple");

    TripleLabels t;
    t.beta = at[0];
    for (JobIndex j : at)
        if (inst.job(j).length() > inst.job(t.beta).length()) t.beta = j;
    std::vector<JobIndex> rest;
    for (JobIndex j : at)
        if (j != t.beta) rest.push_back(j);

    // Owner of the minimum operation among the remaining two; ties keep the
    // earlier job and machine 1.
    Time best = inst.job(rest[0]).a();
    t.alpha = rest[0];
    for (JobIndex j : rest) {
        const auto& job = inst.job(j);
        if (job.a() < best) {
            best = job.a();
            t.alpha = j;
            t.swapped = false;
        }
        if (job.b() < best) {
            best = job.b();
            t.alpha = j;
            t.swapped = true;
        }
    }
    t.gamma = rest[0] == t.alpha ? rest[1] : rest[0];
    return t;
}

std::pair<Schedule, Schedule> three_job_schedules(const Instance& inst) {
    const TripleLabels t = triple_labels(inst);
    if (!t.swapped) return {triple_scheme(inst, t, true), triple_scheme(inst, t, false)};
    const Instance swapped = swap_machines(inst);
    return {swap_back(triple_scheme(swapped, t, true)), swap_back(triple_scheme(swapped, t, false))};
}

Schedule schedule_three_jobs(const Instance& inst) {
    auto [s1, s2] = three_job_schedules(inst);
    const Time R = lower_bound(inst);
    if (s1.makespan == R) return s1;
    if (s2.makespan == R) return s2;
    throw ConsistencyError("neither three-job scheme is normal");
}

const char* to_string(SolveStatus status) {
    return status == SolveStatus::normal ? "Normal" : "AbnormalFallback";
}

SolveOptions default_solve_options() { return {default_oracle_cap()}; }

namespace {

std::optional<Schedule> two_job_chain(const Instance& inst, std::string& tag) {
    const auto chain = chain_from_depot(inst.network());
    const Time R = lower_bound(inst);
    const auto m = metrics(inst);
    const auto candidates = diagonal_candidates(inst);
    for (JobIndex r : candidates) {
        if (inst.job(r).node != chain.front()) continue;
        Schedule s = chain_case1(inst, r);
        if (s.makespan == R) {
            tag = "chain-case1";
            return s;
        }
    }
    for (JobIndex r : candidates) {
        if (inst.job(r).node != chain.back() || inst.job(r).length() < m.load_max) continue;
        Schedule s = chain_case2(inst, r);
        if (s.makespan == R) {
            tag = "chain-case2";
            return s;
        }
    }
    return std::nullopt;
}

Schedule heuristic(const Instance& inst) {
    const auto chain = chain_from_depot(inst.network());
    std::vector<JobIndex> pivots = diagonal_candidates(inst);
    for (JobIndex j : inst.jobs_at(chain.back())) pivots.push_back(j);
    std::optional<Schedule> best;
    for (JobIndex p : pivots) {
        for (ChainLayout layout : {ChainLayout::outward_then_home, ChainLayout::diagonal_pivot}) {
            Schedule s = gs_chain_schedule(inst, p, layout);
            if (!best || s.makespan < best->makespan) best = std::move(s);
        }
    }
    return *best;
}

}  // namespace

SolveReport solve(const Instance& inst, const SolveOptions& options) {
    SolveReport report;
    report.lower_bound = lower_bound(inst);
    if (inst.job_count() == 0) {
        report.scheduler_used = "empty";
        return report;
    }

    ReductionResult red = reduce(inst);
    report.outcome = red.outcome;
    const Instance& reduced = red.reduced;

    std::optional<Schedule> sched;
    try {
        switch (red.outcome) {
            case Outcome::single_node:
                sched = gonzalez_sahni(reduced);
                report.scheduler_used = "gonzalez-sahni";
                break;
            case Outcome::overloaded_edge:
                sched = schedule_overloaded_edge(reduced);
                report.scheduler_used = "overloaded-edge";
                break;
            case Outcome::overloaded_node_three_jobs:
                sched = schedule_three_jobs(reduced);
                report.scheduler_used = "three-jobs";
                break;
            case Outcome::overloaded_node_two_jobs:
                sched = two_job_chain(reduced, report.scheduler_used);
                break;
        }
    } catch (const ConsistencyError&) {
        sched.reset();
    } catch (const PreconditionError&) {
        sched.reset();
    }

    if (!sched) {
        if (reduced.job_count() <= options.oracle_cap) {
            sched = optimal_makespan(reduced, options.oracle_cap).witness;
            report.scheduler_used = "oracle";
        } else {
            sched = heuristic(reduced);
            report.scheduler_used = "heuristic";
        }
    }

    report.schedule = expand(inst, red.trace, *sched);
    const Verdict verdict = validate(inst, report.schedule);
    if (!verdict.feasible) throw ConsistencyError("solve produced an infeasible schedule");
    report.makespan = verdict.makespan;
    report.gap = report.makespan - report.lower_bound;
    report.status = report.gap == 0 ? SolveStatus::normal : SolveStatus::abnormal_fallback;
    return report;
}

}  // namespace rosh
