#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "rosh/classify.hpp"
#include "rosh/reduction.hpp"
#include "rosh/schedulers.hpp"

using namespace rosh;

namespace {

// Names of the nodes of every rooted subtree G_v, indexed by v.
std::vector<std::set<std::string>> subtree_names(const TreeNetwork& net) {
    std::vector<std::set<std::string>> out(net.node_count());
    for (NodeIndex v = 0; v < net.node_count(); ++v)
        for (NodeIndex u = v; u != no_node; u = net.parent(u)) out[u].insert(net.name(v));
    return out;
}

}  // namespace

TEST_CASE("subtree weights of the sample") {
    const auto inst = fixtures::sample();
    const auto& net = inst.network();
    const auto w = subtree_weights(inst);
    const std::vector<std::pair<std::string, Time>> expected{
        {"v0", 113}, {"v1", 5}, {"v2", 15}, {"v3", 3}, {"v4", 65}, {"v5", 3}, {"v6", 37}, {"v7", 5}, {"v8", 11}};
    for (const auto& [name, weight] : expected) {
        CHECK(w[net.index_of(name)] == weight);
        CHECK(subtree_weight(inst, name) == weight);
    }
    CHECK_THROWS_AS(subtree_weight(inst, "v9"), InputError);
    CHECK(subtree_weight(fixtures::oe1(), "v1") == 20);
}

TEST_CASE("sufficient conditions") {
    const auto sample = check_theorem5(fixtures::sample());
    CHECK_FALSE(sample.condition1);
    CHECK_FALSE(sample.condition2);
    CHECK_FALSE(sample.condition3.has_value());
    CHECK_FALSE(sample.condition4.has_value());
    CHECK_FALSE(sample.any);

    const auto six = check_theorem5(fixtures::six_pairs());
    REQUIRE(six.condition4.has_value());
    CHECK(*six.condition4 == "v1");
    CHECK(six.any);
    // Literal Partition 2.0 splits the six jobs into sums 12, 8, 4 and 8 + 4 fits the budget 13.
    CHECK(six.partition_deviation);

    const auto gs = check_theorem5(fixtures::gs1());
    CHECK(gs.condition1);
    const auto one = check_theorem5(fixtures::single_node({{3, 4}}));
    CHECK_FALSE(one.condition1);
    CHECK(one.condition2);

    // W(G_v1) = 20 lies in (22 - 2 - 2, 22 - 2].
    const auto edge = check_theorem5(fixtures::oe1());
    REQUIRE(edge.condition3.has_value());
    CHECK(*edge.condition3 == std::pair<std::string, std::string>{"v0", "v1"});
    // W(G_v1) = 6 is below (14 - 2 - 2, 14 - 2].
    CHECK_FALSE(check_theorem5(fixtures::link({{7, 7}}, {{3, 3}})).condition3.has_value());
}

TEST_CASE("superoverload certificate") {
    const auto triple = fixtures::link({{1, 1}}, {{4, 4}, {4, 4}, {4, 4}});
    CHECK(superoverload_certificate(triple, "v1", {{{"J1"}, {"J2"}, {"J3"}}}));
    CHECK_FALSE(superoverload_certificate(triple, "v1", {{{"J1", "J2"}, {"J3"}, {}}}));

    const auto uneven = fixtures::link({{0, 0}}, {{6, 6}, {4, 4}, {2, 2}});
    CHECK(lower_bound(uneven) == 14);
    CHECK_FALSE(superoverload_certificate(uneven, "v1", {{{"J1"}, {"J2"}, {"J3"}}}));

    CHECK_THROWS_AS(superoverload_certificate(triple, "v1", {{{"J1"}, {"J2"}, {}}}), InputError);
    CHECK_THROWS_AS(superoverload_certificate(triple, "v1", {{{"J1"}, {"J2"}, {"J2", "J3"}}}), InputError);
    CHECK_THROWS_AS(superoverload_certificate(triple, "v1", {{{"J0"}, {"J1"}, {"J2", "J3"}}}), InputError);
}

TEST_CASE("light subtrees never overload and contracted subtrees keep their weight") {
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        auto cfg = fixtures::tree_config(seed);
        cfg.nodes = {1, 9};
        const auto inst = gen_random(cfg);
        const auto& net = inst.network();
        const Time lb = lower_bound(inst);
        const auto w = subtree_weights(inst);
        const auto names = subtree_names(net);

        reduce(inst, [&](const Instance& cur, const ReductionTrace&) {
            const auto& cnet = cur.network();
            const auto load = metrics(cur).node_load;
            for (NodeIndex v = 0; v < net.node_count(); ++v) {
                const auto here = cnet.find(net.name(v));
                if (!here) continue;
                std::size_t alive = 0;
                for (const auto& name : names[v]) alive += cnet.find(name).has_value();
                if (alive == 1) REQUIRE(load[*here] == w[v]);
                if (w[v] > lb - 2 * net.depth(v)) continue;
                for (const auto& name : names[v])
                    if (cnet.find(name)) REQUIRE_FALSE(is_node_overloaded(cur, name));
            }
        });
    }
}

TEST_CASE("fired conditions give normal schedules") {
    std::size_t fired = 0;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        const auto inst = gen_random(fixtures::tree_config(seed));
        const auto v = check_theorem5(inst);
        REQUIRE(v.any == (v.condition1 || v.condition2 || v.condition3 || v.condition4));
        if (!v.any) continue;
        ++fired;
        REQUIRE(solve(inst).status == SolveStatus::normal);
    }
    CHECK(fired > 500);
}
