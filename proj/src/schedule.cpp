#include "rosh/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace rosh {

void update_release(const Instance& inst, Schedule& sched) {
    sched.release = {0, 0};
    for (const auto& op : sched.operations) {
        const JobIndex j = inst.job_index(op.job);
        auto& r = sched.release[slot(op.machine)];
        r = std::max(r, op.end + inst.job_depth(j));
    }
    sched.makespan = std::max(sched.release[0], sched.release[1]);
}

PrecedenceScheme scheme_from_sequences(const Instance& inst, const std::vector<JobIndex>& first,
                                       const std::vector<JobIndex>& second,
                                       const Orientation& orientation) {
    if (orientation.size() != inst.job_count())
        throw InputError("orientation must name one machine per job");
    const auto& net = inst.network();
    PrecedenceScheme scheme;
    for (JobIndex j = 0; j < inst.job_count(); ++j) {
        scheme.add_op({j, Machine::first});
        scheme.add_op({j, Machine::second});
    }
    const std::array<const std::vector<JobIndex>*, 2> seqs{&first, &second};
    for (std::size_t s = 0; s < 2; ++s) {
        const Machine m = machine_of_slot(s);
        const auto& seq = *seqs[s];
        if (seq.empty()) continue;
        scheme.add_arc(PrecedenceScheme::start(), PrecedenceScheme::op(seq.front(), m),
                       inst.job_depth(seq.front()));
        for (std::size_t k = 1; k < seq.size(); ++k) {
            const Time lag = net.distance(inst.job(seq[k - 1]).node, inst.job(seq[k]).node);
            scheme.add_arc(PrecedenceScheme::op(seq[k - 1], m), PrecedenceScheme::op(seq[k], m), lag);
        }
        scheme.add_arc(PrecedenceScheme::op(seq.back(), m), PrecedenceScheme::finish(),
                       inst.job_depth(seq.back()));
    }
    for (JobIndex j = 0; j < inst.job_count(); ++j) {
        const Machine m = orientation[j];
        scheme.add_arc(PrecedenceScheme::op(j, m), PrecedenceScheme::op(j, other(m)), 0);
    }
    return scheme;
}

namespace {

// Graph vertices: 0 = START, 1 + 2j + slot = operation, 2n + 1 = FINISH.
std::size_t vertex_of(const PrecedenceScheme::Endpoint& e, std::size_t n) {
    switch (e.kind) {
        case PrecedenceScheme::Endpoint::Kind::start: return 0;
        case PrecedenceScheme::Endpoint::Kind::finish: return 2 * n + 1;
        case PrecedenceScheme::Endpoint::Kind::op: break;
    }
    if (e.op.job >= n) throw InputError("scheme references an unknown job");
    return 1 + 2 * e.op.job + slot(e.op.machine);
}

}  // namespace

Schedule build_early(const Instance& inst, const PrecedenceScheme& scheme) {
    const std::size_t n = inst.job_count();
    const std::size_t size = 2 * n + 2;

    std::vector<int> covered(2 * n, 0);
    for (const auto& op : scheme.ops()) {
        if (op.job >= n) throw InputError("scheme references an unknown job");
        ++covered[2 * op.job + slot(op.machine)];
    }
    for (std::size_t k = 0; k < covered.size(); ++k) {
        if (covered[k] != 1) {
            throw InputError("scheme must contain operation " + std::to_string(k % 2 + 1) +
                             " of job '" + inst.job(k / 2).id + "' exactly once");
        }
    }

    struct Out {
        std::size_t to;
        Time lag;
    };
    std::vector<std::vector<Out>> out(size);
    std::vector<std::size_t> indegree(size, 0);
    for (const auto& arc : scheme.arcs()) {
        const std::size_t from = vertex_of(arc.from, n);
        const std::size_t to = vertex_of(arc.to, n);
        if (from == size - 1 || to == 0) throw SchemeError("arc leaves FINISH or enters START");
        if (arc.lag < 0) throw SchemeError("negative lag");
        out[from].push_back({to, arc.lag});
        ++indegree[to];
    }

    auto duration = [&](std::size_t v) -> Time {
        if (v == 0 || v == size - 1) return 0;
        const std::size_t k = v - 1;
        return inst.job(k / 2).p[k % 2];
    };

    std::vector<Time> begin(size, 0);
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < size; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++processed;
        const Time done = begin[v] + duration(v);
        for (const auto& [to, lag] : out[v]) {
            begin[to] = std::max(begin[to], done + lag);
            if (--indegree[to] == 0) ready.push_back(to);
        }
    }
    if (processed != size) throw SchemeError("precedence scheme contains a cycle");

    Schedule sched;
    sched.operations.reserve(2 * n);
    for (JobIndex j = 0; j < n; ++j) {
        for (std::size_t s = 0; s < 2; ++s) {
            const std::size_t v = 1 + 2 * j + s;
            sched.operations.push_back(
                {inst.job(j).id, machine_of_slot(s), begin[v], begin[v] + duration(v)});
        }
    }
    update_release(inst, sched);
    sched.makespan = begin[size - 1];
    return sched;
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::overlap: return "overlap";
        case Violation::Kind::depot_departure: return "depot_departure";
        case Violation::Kind::travel: return "travel";
        case Violation::Kind::duration: return "duration";
    }
    return "unknown";
}

Verdict validate(const Instance& inst, const Schedule& sched) {
    const std::size_t n = inst.job_count();
    const auto& net = inst.network();
    std::vector<std::array<std::optional<std::size_t>, 2>> entry(n);
    for (std::size_t k = 0; k < sched.operations.size(); ++k) {
        const auto& op = sched.operations[k];
        const JobIndex j = inst.job_index(op.job);
        auto& e = entry[j][slot(op.machine)];
        if (e) throw InputError("operation " + std::to_string(slot(op.machine) + 1) + " of job '" +
                                op.job + "' is scheduled twice");
        if (op.start < 0) throw InputError("operation of job '" + op.job + "' starts before 0");
        e = k;
    }
    for (JobIndex j = 0; j < n; ++j) {
        for (std::size_t s = 0; s < 2; ++s) {
            if (!entry[j][s])
                throw InputError("missing operation " + std::to_string(s + 1) + " of job '" +
                                 inst.job(j).id + "'");
        }
    }

    Verdict verdict;
    auto report = [&](Violation::Kind kind, std::string message) {
        verdict.violations.push_back({kind, std::move(message)});
    };
    auto op_of = [&](JobIndex j, std::size_t s) -> const ScheduledOperation& {
        return sched.operations[*entry[j][s]];
    };

    for (JobIndex j = 0; j < n; ++j) {
        const auto& job = inst.job(j);
        for (std::size_t s = 0; s < 2; ++s) {
            const auto& op = op_of(j, s);
            if (op.end - op.start != job.p[s])
                report(Violation::Kind::duration, "operation " + std::to_string(s + 1) + " of job '" +
                                                      job.id + "' has the wrong length");
        }
        const auto& x = op_of(j, 0);
        const auto& y = op_of(j, 1);
        if (std::max(x.start, y.start) < std::min(x.end, y.end))
            report(Violation::Kind::overlap, "operations of job '" + job.id + "' overlap");
    }

    for (std::size_t s = 0; s < 2; ++s) {
        std::vector<JobIndex> seq(n);
        std::iota(seq.begin(), seq.end(), JobIndex{0});
        std::sort(seq.begin(), seq.end(), [&](JobIndex l, JobIndex r) {
            const auto& a = op_of(l, s);
            const auto& b = op_of(r, s);
            if (a.start != b.start) return a.start < b.start;
            if (a.end != b.end) return a.end < b.end;
            return l < r;
        });
        const std::string machine = "machine " + std::to_string(s + 1);
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const auto& cur = op_of(seq[k], s);
            const NodeIndex loc = inst.job(seq[k]).node;
            if (k == 0) {
                if (cur.start < net.depth(loc))
                    report(Violation::Kind::depot_departure,
                           machine + " starts job '" + cur.job + "' before it can reach node '" +
                               net.name(loc) + "'");
                continue;
            }
            const auto& prev = op_of(seq[k - 1], s);
            const NodeIndex prev_loc = inst.job(seq[k - 1]).node;
            if (std::max(prev.start, cur.start) < std::min(prev.end, cur.end)) {
                report(Violation::Kind::overlap,
                       machine + " processes jobs '" + prev.job + "' and '" + cur.job + "' at once");
            } else if (cur.start < prev.end + net.distance(prev_loc, loc)) {
                report(Violation::Kind::travel, machine + " cannot travel from job '" + prev.job +
                                                    "' to job '" + cur.job + "' in time");
            }
        }
    }

    Schedule copy{sched.operations, {}, 0};
    update_release(inst, copy);
    verdict.release = copy.release;
    verdict.makespan = copy.makespan;
    verdict.lower_bound = lower_bound(inst);
    verdict.feasible = verdict.violations.empty();
    verdict.normal = verdict.feasible && verdict.makespan == verdict.lower_bound;
    return verdict;
}

}  // namespace rosh
