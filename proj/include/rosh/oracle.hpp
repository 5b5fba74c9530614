#pragma once

// Exhaustive solver for tiny instances: every pair of machine sequences and
// every job orientation, each evaluated as an early schedule.

#include <cstdint>
#include <optional>

#include "rosh/schedule.hpp"

namespace rosh {

inline constexpr std::size_t oracle_default_cap = 5;
inline constexpr std::size_t oracle_max_cap = 6;

// oracle_default_cap, or the value of ROSH_ORACLE_CAP when set.
std::size_t default_oracle_cap();

struct OracleResult {
    Time optimum = 0;
    Schedule witness;
    std::uint64_t explored = 0;  // acyclic configurations evaluated
};

// Throws CapError when the job count exceeds the cap or the cap exceeds
// oracle_max_cap. Running at the maximal cap prints a warning to stderr.
OracleResult optimal_makespan(const Instance& inst, std::optional<std::size_t> cap = std::nullopt);

}  // namespace rosh
