#include "rosh/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <numeric>

namespace rosh {

std::size_t default_oracle_cap() {
    const char* env = std::getenv("ROSH_ORACLE_CAP");
    if (!env || !*env) return oracle_default_cap;
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || env[0] == '-') throw InputError("ROSH_ORACLE_CAP must be a nonnegative integer");
    return static_cast<std::size_t>(value);
}

namespace {

constexpr Time unset = std::numeric_limits<Time>::min();

// Early-schedule evaluation of one configuration by merging the two machine
// sequences in a topological order. Returns nullopt on a cyclic configuration.
class Evaluator {
public:
    explicit Evaluator(const Instance& inst) : inst_(inst), n_(inst.job_count()) {
        const auto& net = inst.network();
        depth_.resize(n_);
        dist_.assign(n_ * n_, 0);
        for (JobIndex i = 0; i < n_; ++i) {
            depth_[i] = inst.job_depth(i);
            for (JobIndex k = 0; k < n_; ++k) dist_[i * n_ + k] = net.distance(inst.job(i).node, inst.job(k).node);
        }
        end_.resize(2 * n_);
    }

    std::optional<Time> operator()(const std::vector<JobIndex>& m1, const std::vector<JobIndex>& m2,
                                   unsigned orientation) {
        std::fill(end_.begin(), end_.end(), unset);
        const std::array<const std::vector<JobIndex>*, 2> seq{&m1, &m2};
        std::array<std::size_t, 2> pos{0, 0};
        std::array<Time, 2> ready{0, 0};
        std::size_t done = 0;
        while (done < 2 * n_) {
            bool progressed = false;
            for (std::size_t s = 0; s < 2; ++s) {
                while (pos[s] < n_) {
                    const JobIndex j = (*seq[s])[pos[s]];
                    // Bit j set: machine 2 first.
                    const std::size_t first = (orientation >> j) & 1u;
                    Time start = pos[s] == 0 ? depth_[j] : ready[s] + dist_[(*seq[s])[pos[s] - 1] * n_ + j];
                    if (s != first) {
                        const Time pred = end_[2 * j + first];
                        if (pred == unset) break;
                        start = std::max(start, pred);
                    }
                    ready[s] = start + inst_.job(j).p[s];
                    end_[2 * j + s] = ready[s];
                    ++pos[s];
                    ++done;
                    progressed = true;
                }
            }
            if (!progressed) return std::nullopt;
        }
        Time makespan = 0;
        for (std::size_t s = 0; s < 2; ++s)
            if (n_ > 0) makespan = std::max(makespan, ready[s] + depth_[seq[s]->back()]);
        return makespan;
    }

private:
    const Instance& inst_;
    std::size_t n_;
    std::vector<Time> depth_;
    std::vector<Time> dist_;
    std::vector<Time> end_;
};

}  // namespace

OracleResult optimal_makespan(const Instance& inst, std::optional<std::size_t> cap) {
    const std::size_t limit = cap.value_or(default_oracle_cap());
    if (limit > oracle_max_cap)
        throw CapError("oracle cap " + std::to_string(limit) + " exceeds the maximum of " +
                       std::to_string(oracle_max_cap));
    const std::size_t n = inst.job_count();
    if (n > limit)
        throw CapError("instance has " + std::to_string(n) + " jobs, oracle cap is " + std::to_string(limit));
    if (n == oracle_max_cap) std::cerr << "warning: oracle enumerating " << n << " jobs, this is slow\n";

    OracleResult result;
    if (n == 0) {
        result.explored = 1;
        return result;
    }

    Evaluator eval(inst);
    std::vector<JobIndex> m1(n);
    std::iota(m1.begin(), m1.end(), JobIndex{0});
    Time best = std::numeric_limits<Time>::max();
    std::vector<JobIndex> best1;
    std::vector<JobIndex> best2;
    unsigned best_orientation = 0;
    do {
        std::vector<JobIndex> m2(n);
        std::iota(m2.begin(), m2.end(), JobIndex{0});
        do {
            for (unsigned o = 0; o < (1u << n); ++o) {
                const auto value = eval(m1, m2, o);
                if (!value) continue;
                ++result.explored;
                if (*value < best) {
                    best = *value;
                    best1 = m1;
                    best2 = m2;
                    best_orientation = o;
                }
            }
        } while (std::next_permutation(m2.begin(), m2.end()));
    } while (std::next_permutation(m1.begin(), m1.end()));

    Orientation orientation(n);
    for (JobIndex j = 0; j < n; ++j) orientation[j] = (best_orientation >> j) & 1u ? Machine::second : Machine::first;
    result.witness = build_early(inst, scheme_from_sequences(inst, best1, best2, orientation));
    if (result.witness.makespan != best) throw ConsistencyError("oracle witness disagrees with its evaluation");
    result.optimum = best;
    return result;
}

}  // namespace rosh
