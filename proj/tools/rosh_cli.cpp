#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rosh/experiment.hpp"
#include "rosh/oracle.hpp"

namespace {

using namespace rosh;

Range parse_range(const std::string& text, const char* name) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        const Time lo = std::stoll(text.substr(0, colon), &used);
        if (used != (colon == std::string::npos ? text.size() : colon)) throw std::invalid_argument(text);
        if (colon == std::string::npos) return {lo, lo};
        const std::string rest = text.substr(colon + 1);
        const Time hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError(std::string(name) + ": expected N or LO:HI, got '" + text + "'");
    }
}

struct GenFlags {
    std::uint64_t seed = 1;
    std::string nodes = "1:6";
    std::string tau = "0:5";
    std::string jobs_per_node = "1:3";
    std::string depot_jobs = "0:3";
    std::string duration = "0:10";
    std::size_t max_jobs = 0;

    void attach(CLI::App* app) {
        app->add_option("--seed", seed, "Random seed");
        app->add_option("--nodes", nodes, "Node count range LO:HI");
        app->add_option("--tau", tau, "Edge weight range LO:HI");
        app->add_option("--jobs-per-node", jobs_per_node, "Jobs per non-depot node LO:HI");
        app->add_option("--depot-jobs", depot_jobs, "Jobs at the depot LO:HI");
        app->add_option("--duration", duration, "Operation duration range LO:HI");
        app->add_option("--max-jobs", max_jobs, "Upper bound on the job count (0: none)");
    }

    GeneratorConfig config() const {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = parse_range(nodes, "--nodes");
        cfg.tau = parse_range(tau, "--tau");
        cfg.jobs_per_node = parse_range(jobs_per_node, "--jobs-per-node");
        cfg.depot_jobs = parse_range(depot_jobs, "--depot-jobs");
        cfg.duration = parse_range(duration, "--duration");
        cfg.max_jobs = max_jobs;
        return cfg;
    }
};

Instance load(const std::string& path) { return parse_instance(read_file(path)); }

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-machine routing open shop on a tree: bounds, reduction, normal schedules"};
    app.require_subcommand(1);

    std::string file;
    std::string sched_file;
    bool verbose = false;
    std::size_t cap = 0;
    std::size_t solve_cap = 0;

    auto* lb = app.add_subcommand("lowerbound", "Print the standard lower bound");
    lb->add_option("FILE", file, "Instance JSON")->required();
    lb->add_flag("--verbose", verbose, "Print loads and tour length as JSON");

    auto* red = app.add_subcommand("reduce", "Reduce an instance and print it with its trace");
    red->add_option("FILE", file, "Instance JSON")->required();

    auto* cls = app.add_subcommand("classify", "Reduction outcome and the sufficient conditions for normality");
    cls->add_option("FILE", file, "Instance JSON")->required();

    auto* slv = app.add_subcommand("solve", "Build a schedule for the original instance");
    slv->add_option("FILE", file, "Instance JSON")->required();
    slv->add_option("--oracle-cap", solve_cap, "Largest reduced instance solved exactly in the fallback");

    auto* val = app.add_subcommand("validate", "Check a schedule; exit 1 when infeasible");
    val->add_option("FILE", file, "Instance JSON")->required();
    val->add_option("SCHEDFILE", sched_file, "Schedule JSON")->required();

    auto* orc = app.add_subcommand("oracle", "Exact optimum by enumeration");
    orc->add_option("FILE", file, "Instance JSON")->required();
    orc->add_option("--cap", cap, "Job limit (at most 6)");

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen_flags.attach(gen);

    GenFlags exp_flags;
    std::size_t count = 100;
    std::size_t threads = 1;
    std::string summary_path;
    std::string output_path;
    auto* exp = app.add_subcommand("experiment", "Outcome frequencies over random instances (CSV)");
    exp_flags.attach(exp);
    exp->add_option("--count", count, "Number of instances");
    exp->add_option("--jobs", threads, "Worker threads");
    exp->add_option("--summary", summary_path, "Write the JSON summary here instead of stderr");
    exp->add_option("--output", output_path, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_to_json("usage", e.what()).dump() << '\n';
        return 2;
    }

    try {
        if (*lb) {
            const Instance inst = load(file);
            if (!verbose) {
                std::cout << lower_bound(inst) << '\n';
            } else {
                const auto m = metrics(inst);
                emit({{"lower_bound", m.lower_bound},
                      {"tsp_opt", m.tsp_opt},
                      {"load1", m.load1},
                      {"load2", m.load2},
                      {"load_max", m.load_max}});
            }
        } else if (*red) {
            const Instance inst = load(file);
            const ReductionResult result = reduce(inst);
            emit({{"outcome", to_string(result.outcome)},
                  {"lower_bound", lower_bound(result.reduced)},
                  {"instance", instance_to_json(result.reduced)},
                  {"trace", trace_to_json(result.trace)}});
        } else if (*cls) {
            const Instance inst = load(file);
            const ReductionResult result = reduce(inst);
            Json doc{{"outcome", to_string(result.outcome)},
                     {"lower_bound", lower_bound(inst)},
                     {"partition", to_string(result.resolution.procedure)},
                     {"theorem5", theorem5_to_json(check_theorem5(inst))}};
            emit(doc);
        } else if (*slv) {
            const Instance inst = load(file);
            SolveOptions options = default_solve_options();
            if (slv->count("--oracle-cap") > 0) options.oracle_cap = solve_cap;
            emit(report_to_json(inst, solve(inst, options)));
        } else if (*val) {
            const Instance inst = load(file);
            const Verdict verdict = validate(inst, parse_schedule(inst, read_file(sched_file)));
            emit(verdict_to_json(verdict));
            return verdict.feasible ? 0 : 1;
        } else if (*orc) {
            const Instance inst = load(file);
            const auto result =
                optimal_makespan(inst, orc->count("--cap") > 0 ? std::optional<std::size_t>(cap) : std::nullopt);
            emit({{"optimum", result.optimum},
                  {"lower_bound", lower_bound(inst)},
                  {"explored", result.explored},
                  {"schedule", schedule_to_json(inst, result.witness)}});
        } else if (*gen) {
            std::cout << write_instance(gen_random(gen_flags.config()));
        } else if (*exp) {
            ExperimentConfig cfg;
            cfg.generator = exp_flags.config();
            cfg.count = count;
            cfg.threads = threads;
            const auto rows = run_experiment(cfg);
            const std::string csv = rows_to_csv(rows);
            if (output_path.empty()) {
                std::cout << csv;
            } else {
                write_text(output_path, csv);
            }
            const std::string summary = summarize(rows).dump(2) + "\n";
            if (summary_path.empty()) {
                std::cerr << summary;
            } else {
                write_text(summary_path, summary);
            }
        }
    } catch (const Error& e) {
        std::cerr << error_to_json(e.kind(), e.what()).dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_to_json("internal", e.what()).dump() << '\n';
        return 2;
    }
    return 0;
}
