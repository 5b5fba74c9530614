#pragma once

// Outcome-frequency study over seeded random instances.

#include <cstdint>
#include <string>
#include <vector>

#include "rosh/generator.hpp"
#include "rosh/io.hpp"

namespace rosh {

struct ExperimentRow {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t nodes = 0;
    Outcome outcome = Outcome::single_node;
    std::string theorem5;  // fired conditions joined by '+', or "none"
    SolveStatus status = SolveStatus::normal;
    Time gap = 0;
    std::string scheduler;
};

struct ExperimentConfig {
    GeneratorConfig generator;  // generator.seed is the base seed
    std::size_t count = 100;
    std::size_t threads = 1;
    SolveOptions solve = default_solve_options();
};

std::string theorem5_tag(const Theorem5Verdict& verdict);

ExperimentRow run_one(const GeneratorConfig& cfg, const SolveOptions& options);

// Instance i uses seed base + i; rows come back in seed order whatever the
// thread count.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

// Outcome, status and sufficient-condition frequencies; seeds where a fired condition did
// not give a normal schedule are listed.
Json summarize(const std::vector<ExperimentRow>& rows);

}  // namespace rosh
