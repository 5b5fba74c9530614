#include "rosh/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace rosh {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string theorem5_tag(const Theorem5Verdict& verdict) {
    std::string tag;
    auto add = [&](bool fired, const char* name) {
        if (!fired) return;
        if (!tag.empty()) tag += '+';
        tag += name;
    };
    add(verdict.condition1, "c1");
    add(verdict.condition2, "c2");
    add(verdict.condition3.has_value(), "c3");
    add(verdict.condition4.has_value(), "c4");
    return tag.empty() ? "none" : tag;
}

ExperimentRow run_one(const GeneratorConfig& cfg, const SolveOptions& options) {
    const Instance inst = gen_random(cfg);
    const SolveReport report = solve(inst, options);
    ExperimentRow row;
    row.seed = cfg.seed;
    row.n = inst.job_count();
    row.nodes = inst.network().node_count();
    row.outcome = report.outcome;
    row.theorem5 = theorem5_tag(check_theorem5(inst));
    row.status = report.status;
    row.gap = report.gap;
    row.scheduler = report.scheduler_used;
    return row;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    check_config(cfg.generator);
    std::vector<ExperimentRow> rows(cfg.count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.count; i = next++) {
            try {
                GeneratorConfig gen = cfg.generator;
                gen.seed = cfg.generator.seed + i;
                rows[i] = run_one(gen, cfg.solve);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, cfg.count));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
    std::string out = "seed,n,nodes,outcome,theorem5,status,gap,scheduler\r\n";
    for (const auto& r : rows) {
        out += std::to_string(r.seed) + ',' + std::to_string(r.n) + ',' + std::to_string(r.nodes) + ',' +
               csv_field(to_string(r.outcome)) + ',' + csv_field(r.theorem5) + ',' + csv_field(to_string(r.status)) +
               ',' + std::to_string(r.gap) + ',' + csv_field(r.scheduler) + "\r\n";
    }
    return out;
}

Json summarize(const std::vector<ExperimentRow>& rows) {
    Json outcomes = Json::object();
    for (Outcome o : {Outcome::single_node, Outcome::overloaded_edge, Outcome::overloaded_node_three_jobs,
                      Outcome::overloaded_node_two_jobs})
        outcomes[to_string(o)] = 0;
    Json status = {{to_string(SolveStatus::normal), 0}, {to_string(SolveStatus::abnormal_fallback), 0}};
    std::size_t fired = 0;
    Json violations = Json::array();
    Time max_gap = 0;
    for (const auto& r : rows) {
        outcomes[to_string(r.outcome)] = outcomes[to_string(r.outcome)].get<std::size_t>() + 1;
        status[to_string(r.status)] = status[to_string(r.status)].get<std::size_t>() + 1;
        max_gap = std::max(max_gap, r.gap);
        if (r.theorem5 == "none") continue;
        ++fired;
        if (r.status != SolveStatus::normal) violations.push_back(r.seed);
    }
    return {{"count", rows.size()},
            {"outcomes", std::move(outcomes)},
            {"status", std::move(status)},
            {"max_gap", max_gap},
            {"theorem5_fired", fired},
            {"theorem5_violations", std::move(violations)}};
}

}  // namespace rosh
