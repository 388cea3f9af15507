#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "ltw/generators.hpp"
#include "ltw/order.hpp"
#include "oracles.hpp"

using namespace ltw;

namespace {

NameTable make_names(int n) {
    NameTable t;
    for (int i = 1; i <= n; ++i) t.add("e" + std::to_string(i));
    return t;
}

// Random DAG relation: only forward pairs (i, j) with i < j, so always acyclic.
PartialOrder random_poset(int n, double density, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(density)) pairs.emplace_back(i, j);
    OrderBuild build = build_order(make_names(n), pairs);
    REQUIRE(build.ok);
    return build.order;
}

}  // namespace

TEST_CASE("close_relation adds reflexive and transitive pairs") {
    Relation rel(make_names(3));
    rel.add_pair(0, 1);
    rel.add_pair(1, 2);
    Relation closed = close_relation(rel);
    CHECK(closed.has(0, 2));
    CHECK(closed.has(0, 0));
    CHECK(closed.has(2, 2));
    CHECK_FALSE(closed.has(2, 0));
    CHECK_FALSE(rel.has(0, 2));
}

TEST_CASE("check_partial_order reports the strongly connected set") {
    Relation rel(make_names(4));
    rel.add_pair(0, 1);
    rel.add_pair(1, 2);
    rel.add_pair(2, 0);
    rel.add_pair(2, 3);
    OrderCheck check = check_partial_order(close_relation(rel));
    CHECK_FALSE(check.ok);
    CHECK(check.cycle == std::vector<int>{0, 1, 2});
}

TEST_CASE("build_order distinguishes cyclic from acyclic pair sets") {
    OrderBuild bad = build_order(make_names(2), {{0, 1}, {1, 0}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.cycle == std::vector<int>{0, 1});

    OrderBuild good = build_order(make_names(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    REQUIRE(good.ok);
    CHECK(good.order.less(0, 3));
    CHECK_FALSE(good.order.less(3, 0));
    CHECK_FALSE(good.order.less(1, 1));
    CHECK(good.order.comparable(0, 3));
    CHECK_FALSE(good.order.comparable(1, 2));
}

TEST_CASE("hasse keeps covers only") {
    OrderBuild diamond = build_order(make_names(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    REQUIRE(diamond.ok);
    auto covers = hasse(diamond.order).cover_edges;
    CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    OrderBuild chain = build_order(make_names(3), {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(chain.ok);
    CHECK(hasse(chain.order).cover_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("height counts elements of a longest chain") {
    CHECK(height(build_order(make_names(0), {}).order) == 0);
    CHECK(height(build_order(make_names(3), {}).order) == 1);
    CHECK(height(build_order(make_names(3), {{0, 1}, {1, 2}}).order) == 3);
    CHECK(height(build_order(make_names(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).order) == 3);
}

TEST_CASE("chain_partition yields disjoint ascending chains of minimum count") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 12);
        double density = 0.08 * static_cast<double>(seed % 11);
        PartialOrder order = random_poset(n, density, seed);
        ChainPartition part = chain_partition(order);

        std::vector<int> all;
        for (const auto& chain : part.chains) {
            REQUIRE(!chain.empty());
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) REQUIRE(order.less(chain[i], chain[i + 1]));
            all.insert(all.end(), chain.begin(), chain.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) expect[static_cast<std::size_t>(i)] = i;
        REQUIRE(all == expect);

        REQUIRE(static_cast<int>(part.chains.size()) == oracle::max_antichain(order));
        REQUIRE(width(order) == static_cast<int>(part.chains.size()));
        REQUIRE(height(order) == oracle::longest_chain(order));
    }
}

TEST_CASE("hasse covers regenerate the order") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        int n = 2 + static_cast<int>(seed % 10);
        PartialOrder order = random_poset(n, 0.4, seed);
        OrderBuild rebuilt = build_order(order.elements, hasse(order).cover_edges);
        REQUIRE(rebuilt.ok);
        REQUIRE(rebuilt.order.strict_pairs() == order.strict_pairs());
    }
}

TEST_CASE("is_cs_tree accepts exactly unique-minimum Hasse trees") {
    CHECK(is_cs_tree(build_order(make_names(1), {}).order));
    CHECK(is_cs_tree(build_order(make_names(3), {{0, 1}, {1, 2}}).order));
    // branching upward is fine
    CHECK(is_cs_tree(build_order(make_names(3), {{0, 1}, {0, 2}}).order));
    // two minimal elements
    CHECK_FALSE(is_cs_tree(build_order(make_names(3), {{0, 2}, {1, 2}}).order));
    // diamond: top has two incomparable predecessors
    CHECK_FALSE(is_cs_tree(build_order(make_names(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).order));
    // disconnected
    CHECK_FALSE(is_cs_tree(build_order(make_names(2), {}).order));
    CHECK_FALSE(is_cs_tree(build_order(make_names(0), {}).order));
}

TEST_CASE("relation pair listing is row-major") {
    Relation rel(make_names(3));
    rel.add_pair(2, 0);
    rel.add_pair(0, 2);
    rel.add_pair(0, 1);
    CHECK(rel.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 0}});
}
