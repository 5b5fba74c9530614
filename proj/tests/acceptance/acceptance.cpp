// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "rosh/classify.hpp"
#include "rosh/experiment.hpp"
#include "rosh/io.hpp"
#include "rosh/oracle.hpp"
#include "rosh/schedulers.hpp"

namespace {

using namespace rosh;
using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail << what;
        ok = false;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;
Check lb_preserved;

void report(int id, const char* name, const Check& c, double secs, const std::string& stats) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs,
                stats.empty() ? "" : " ", stats.c_str(), c.ok ? "" : (" -- " + c.detail.str()).c_str());
    if (!c.ok) ++failures;
}

std::vector<std::pair<Time, Time>> jobs_at(const Instance& inst, const std::string& node) {
    std::vector<std::pair<Time, Time>> out;
    for (JobIndex j : inst.jobs_at(inst.network().index_of(node))) out.emplace_back(inst.job(j).a(), inst.job(j).b());
    std::sort(out.begin(), out.end());
    return out;
}

void worked_example() {
    const auto t0 = Clock::now();
    Check c;
    const Instance inst = parse_instance(read_file(std::string(ROSH_DATA_DIR) + "/sample.json"));
    const ReductionResult r = reduce(inst);
    const Instance& red = r.reduced;
    c.expect(red.network().node_count() == 2, "reduced network is not (v0, v4); ");
    c.expect(jobs_at(red, "v0") == std::vector<std::pair<Time, Time>>{{21, 19}}, "depot job differs; ");
    c.expect(jobs_at(red, "v4") == std::vector<std::pair<Time, Time>>{{14, 10}, {17, 24}}, "v4 jobs differ; ");
    c.expect(metrics(red).node_load[red.network().index_of("v4")] == 65, "load of v4 is not 65; ");
    c.expect(r.outcome == Outcome::overloaded_node_two_jobs, "outcome is not OverloadedNodeTwoJobs; ");
    bool saw_aggregate = false;
    bool saw_contract = false;
    for (const auto& rec : r.trace.records()) {
        if (const auto* a = std::get_if<AggregateRecord>(&rec))
            saw_aggregate |= a->node == "v0" && a->p == Durations{4, 6};
        else
            saw_contract |= std::get<ContractRecord>(rec).after == Durations{6, 3};
    }
    c.expect(saw_aggregate, "aggregation (4,6) missing from trace; ");
    c.expect(saw_contract, "contraction result (6,3) missing from trace; ");
    const double secs = seconds_since(t0);
    c.expect(secs < 1.0, "slower than 1 s; ");
    report(1, "worked example reduces to the final table", c, secs, "");
}

void lower_bound_arithmetic() {
    const auto t0 = Clock::now();
    Check c;
    const auto m = metrics(fixtures::sample());
    c.expect(m.tsp_opt == 28, "T* != 28; ");
    c.expect(m.load1 == 28, "l1 != 28; ");
    c.expect(m.load2 == 29, "l2 != 29; ");
    c.expect(m.lower_bound == 57, "R != 57; ");
    report(2, "T* = 28, l2 = 29, R = 57", c, seconds_since(t0), "");
}

// Precondition on the reduced instance, and the schedule it admits.
std::optional<Schedule> construct(fixtures::Family family, const ReductionResult& r) {
    using fixtures::Family;
    const Instance& red = r.reduced;
    switch (family) {
        case Family::single_node:
            if (r.outcome != Outcome::single_node) return std::nullopt;
            return gonzalez_sahni(red);
        case Family::overloaded_edge:
            if (r.outcome != Outcome::overloaded_edge) return std::nullopt;
            return schedule_overloaded_edge(red);
        case Family::triple: {
            if (r.outcome != Outcome::overloaded_node_three_jobs) return std::nullopt;
            auto [s1, s2] = three_job_schedules(red);
            const Time R = lower_bound(red);
            if (s1.makespan != R && s2.makespan != R) throw ConsistencyError("neither S1 nor S2 is normal");
            return schedule_three_jobs(red);
        }
        case Family::depot_diagonal:
        case Family::far_diagonal: {
            if (red.network().node_count() < 2) return std::nullopt;
            const auto chain = chain_from_depot(red.network());
            const Time lmax = metrics(red).load_max;
            for (JobIndex j : diagonal_candidates(red)) {
                if (family == Family::depot_diagonal && red.job(j).node == chain.front())
                    return chain_case1(red, j);
                if (family == Family::far_diagonal && red.job(j).node == chain.back() && red.job(j).length() >= lmax)
                    return chain_case2(red, j);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void constructive_normality() {
    using fixtures::Family;
    const auto t0 = Clock::now();
    Check c;
    std::ostringstream stats;
    constexpr std::size_t wanted = 10000;
    for (Family family : {Family::single_node, Family::overloaded_edge, Family::triple, Family::depot_diagonal,
                          Family::far_diagonal}) {
        std::size_t accepted = 0;
        std::uint64_t seed = 0;
        for (; accepted < wanted && seed < 50 * wanted; ++seed) {
            const Instance inst = fixtures::biased(family, seed);
            const ReductionResult r = reduce(inst);
            std::optional<Schedule> s;
            try {
                s = construct(family, r);
            } catch (const Error& e) {
                c.expect(false, std::string(fixtures::family_name(family)) + " seed " + std::to_string(seed) +
                                    ": " + e.what() + "; ");
                continue;
            }
            if (!s) continue;
            ++accepted;
            const Schedule full = expand(inst, r.trace, *s);
            const Verdict v = validate(inst, full);
            c.expect(v.feasible && v.makespan == lower_bound(inst),
                     std::string(fixtures::family_name(family)) + " seed " + std::to_string(seed) +
                         ": expanded schedule is not normal; ");
        }
        c.expect(accepted == wanted, std::string(fixtures::family_name(family)) + ": only " +
                                         std::to_string(accepted) + " instances met the precondition; ");
        stats << fixtures::family_name(family) << '=' << accepted << '/' << seed << ' ';
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 60.0, "slower than 60 s; ");
    report(3, "constructive schedulers are normal after expansion", c, secs, stats.str());
}

void oracle_equivalence() {
    const auto t0 = Clock::now();
    Check c;
    std::size_t normal = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Instance inst = gen_random(fixtures::tiny_config(seed));
        c.expect(inst.job_count() <= 5 && inst.network().node_count() <= 4, "generator exceeded the size limits; ");
        const Time R = lower_bound(inst);
        const OracleResult o = optimal_makespan(inst, 5);
        c.expect(o.optimum >= R, "seed " + std::to_string(seed) + ": optimum below the lower bound; ");
        c.expect(validate(inst, o.witness).makespan == o.optimum, "seed " + std::to_string(seed) + ": bad witness; ");
        const SolveReport rep = solve(inst);
        c.expect(rep.makespan >= o.optimum, "seed " + std::to_string(seed) + ": solve beat the oracle; ");
        if (rep.status == SolveStatus::normal) {
            ++normal;
            c.expect(o.optimum == R && rep.makespan == R,
                     "seed " + std::to_string(seed) + ": Normal report disagrees with the oracle; ");
        }
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 300.0, "slower than 5 min; ");
    report(4, "oracle agrees with solve on tiny instances", c, secs, "normal=" + std::to_string(normal) + "/1000");
}

void structural_invariants() {
    const auto t0 = Clock::now();
    Check c;
    std::size_t steps = 0;
    Check& preserved = lb_preserved;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const Instance inst = gen_random(fixtures::tree_config(seed));
        const Time W = subtree_weights(inst)[inst.network().depot()];
        const Time R = lower_bound(inst);
        const ReductionResult r = reduce(inst, [&](const Instance& cur, const ReductionTrace&) {
            ++steps;
            if (overload_census(cur).count() > 1) c.expect(false, "seed " + std::to_string(seed) + ": census > 1; ");
            if (subtree_weights(cur)[cur.network().depot()] != W)
                c.expect(false, "seed " + std::to_string(seed) + ": W(G) changed; ");
            if (lower_bound(cur) != R) preserved.expect(false, "seed " + std::to_string(seed) + ": R changed mid-run; ");
        });
        preserved.expect(lower_bound(r.reduced) == R, "seed " + std::to_string(seed) + ": R changed; ");
    }
    report(5, "census <= 1 and W(G) conserved at every step", c, seconds_since(t0),
           "steps=" + std::to_string(steps));
}

// Continues the check started on the criterion 5 instances.
void lower_bound_preserved() {
    Check& preserved = lb_preserved;
    const auto t1 = Clock::now();
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        for (const auto& cfg : {fixtures::tiny_config(seed), fixtures::tree_config(seed + 1000000)}) {
            const Instance inst = gen_random(cfg);
            preserved.expect(lower_bound(reduce(inst).reduced) == lower_bound(inst),
                             "seed " + std::to_string(cfg.seed) + ": R changed; ");
        }
    }
    report(7, "reduction preserves the lower bound", preserved, seconds_since(t1), "instances=30000");
}

void theorem5_soundness() {
    const auto t0 = Clock::now();
    Check c;
    std::array<std::size_t, 4> tally{};
    std::size_t fired = 0;
    std::size_t deviations = 0;
    std::size_t fallback = 0;
    auto run = [&](const Instance& inst, const std::string& label) {
        const Theorem5Verdict v = check_theorem5(inst);
        deviations += v.partition_deviation;
        if (!v.any) return;
        ++fired;
        tally[0] += v.condition1;
        tally[1] += v.condition2;
        tally[2] += v.condition3.has_value();
        tally[3] += v.condition4.has_value();
        const SolveReport rep = solve(inst);
        fallback += rep.scheduler_used == "oracle" || rep.scheduler_used == "heuristic";
        if (rep.status != SolveStatus::normal || rep.gap != 0) {
            std::cerr << "sufficient-condition finding: " << label << " conditions " << theorem5_tag(v) << " gap " << rep.gap
                      << '\n';
            c.expect(false, label + " is abnormal; ");
        }
    };
    // Generic trees, then trees with a crowded leaf so that condition 4 fires too.
    for (std::uint64_t seed = 0; seed < 10000; ++seed)
        run(gen_random(fixtures::tree_config(seed + 2000000)), "tree seed " + std::to_string(seed + 2000000));
    for (std::uint64_t seed = 0; seed < 10000; ++seed)
        run(fixtures::biased(fixtures::Family::triple, seed + 3000000),
            "crowded-leaf seed " + std::to_string(seed + 3000000));
    std::ostringstream stats;
    stats << "fired=" << fired << "/20000 c1=" << tally[0] << " c2=" << tally[1] << " c3=" << tally[2]
          << " c4=" << tally[3] << " fallback=" << fallback << " partition_deviation=" << deviations;
    report(6, "instances meeting a sufficient condition solve to Normal", c, seconds_since(t0), stats.str());
}

void scale() {
    GeneratorConfig cfg;
    cfg.seed = 8;
    cfg.nodes = {10000, 10000};
    cfg.jobs_per_node = {5, 5};
    cfg.depot_jobs = {5, 5};
    cfg.tau = {0, 5};
    cfg.duration = {0, 10};
    const Instance inst = gen_random(cfg);
    Check c;
    c.expect(inst.job_count() == 50000, "instance does not have 5e4 jobs; ");
    const auto t0 = Clock::now();
    const ReductionResult r = reduce(inst);
    const double secs = seconds_since(t0);
    c.expect(secs < 2.0, "slower than 2 s; ");
    report(8, "reduce on 1e4 nodes and 5e4 jobs", c, secs,
           std::string("outcome=") + to_string(r.outcome) + " steps=" + std::to_string(r.trace.size()));
}

}  // namespace

int main() {
    try {
        worked_example();
        lower_bound_arithmetic();
        constructive_normality();
        oracle_equivalence();
        structural_invariants();
        theorem5_soundness();
        lower_bound_preserved();
        scale();
    } catch (const std::exception& e) {
        std::printf("[FAIL] aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
