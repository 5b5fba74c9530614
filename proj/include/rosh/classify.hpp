#pragma once

// Subtree weights and the sufficient conditions for an efficiently normal instance.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rosh/model.hpp"

namespace rosh {

// W(G_v) for every node v: loads of the subtree rooted at v (away from the
// depot) plus four times its edge weights. Indexed by node.
std::vector<Time> subtree_weights(const Instance& inst);

Time subtree_weight(const Instance& inst, std::string_view root);

struct Theorem5Verdict {
    bool condition1 = false;  // depot overloaded
    bool condition2 = false;  // every depot neighbour v has W(G_v) <= R - 2 tau(v0, v)
    std::optional<std::pair<std::string, std::string>> condition3;  // edge (parent, v(e))
    std::optional<std::string> condition4;                          // node v
    bool any = false;
    // Condition 4 holds, yet the reduction did not end in an irreducible triple
    // or Partition 2.0 applied literally would leave a reducible split.
    bool partition_deviation = false;
};

Theorem5Verdict check_theorem5(const Instance& inst);

// True iff every part fits the budget of `node` and every pair of parts exceeds
// it. Throws InputError unless the parts partition the jobs at `node`.
bool superoverload_certificate(const Instance& inst, std::string_view node,
                               const std::array<std::vector<std::string>, 3>& parts);

}  // namespace rosh
