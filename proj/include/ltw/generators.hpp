#pragma once

#include <cstdint>

#include "ltw/graph.hpp"
#include "ltw/intermezzo.hpp"
#include "ltw/reductions.hpp"

namespace ltw {

// Deterministic 64-bit stream (SplitMix64). The algorithm is part of the
// reproducibility contract: the same seed yields the same instances on
// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // uniform in [0, bound), bound > 0, without modulo bias
    std::uint64_t below(std::uint64_t bound);
    // uniform in [lo, hi], inclusive
    int range(int lo, int hi);
    bool chance(double p);

private:
    std::uint64_t state_;
};

struct LtreeInstance {
    Graph graph;
    RootedSpanningTree tree;
};

// Ring of t root branches whose cross chords force a cyclic precedence;
// rooted recognition fails on necessity alone, yet the instance becomes
// feasible once the rooting is freed. Requires t >= 2.
LtreeInstance gen_fig4(int t);

// Random 3-CNF with three distinct variables per clause. n >= 3, m >= 1.
CnfFormula gen_random_cnf(int n, int m, std::uint64_t seed);

// Properly colored random graph: k classes of q vertices, every cross-class
// edge kept with probability edge_prob. k >= 2, q >= 1.
MulticolorGraph gen_random_mcp(int k, int q, double edge_prob, std::uint64_t seed);

// Instance over k chains covering n elements (consecutive-element pairs),
// plus up to triple_count random triples whose last two components follow
// one chain. Induced width is at most k. k >= 1, n >= k.
GimInstance gen_random_gim(int k, int n, int triple_count, std::uint64_t seed);

// Connected instance: spanning tree with uniformly random earlier parents
// plus chords kept with probability extra_edge_prob. n >= 1.
LtreeInstance gen_random_ltree(int n, double extra_edge_prob, std::uint64_t seed);

}  // namespace ltw
