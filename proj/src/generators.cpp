#include "ltw/generators.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <string>
#include <vector>

#include "ltw/errors.hpp"

namespace ltw {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    assert(bound > 0);
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

int SplitMix64::range(int lo, int hi) {
    assert(lo <= hi);
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1));
}

bool SplitMix64::chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
}

LtreeInstance gen_fig4(int t) {
    if (t < 2) throw ValidationError("gen_fig4 needs t >= 2");
    LtreeInstance out;
    Graph& g = out.graph;
    std::vector<int> parent;
    int r = g.add_vertex("r");
    parent.push_back(-1);
    std::vector<int> top(static_cast<std::size_t>(t)), bot(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        top[i - 1] = g.add_vertex("top." + std::to_string(i));
        parent.push_back(r);
        bot[i - 1] = g.add_vertex("bot." + std::to_string(i));
        parent.push_back(top[i - 1]);
    }
    for (int v = 1; v < g.vertex_count(); ++v) g.add_edge(v, parent[static_cast<std::size_t>(v)]);
    for (int i = 0; i + 1 < t; ++i) g.add_edge(top[static_cast<std::size_t>(i) + 1], bot[static_cast<std::size_t>(i)]);
    g.add_edge(top[0], bot[static_cast<std::size_t>(t) - 1]);
    out.tree = RootedSpanningTree::from_parents(r, std::move(parent));
    return out;
}

CnfFormula gen_random_cnf(int n, int m, std::uint64_t seed) {
    if (n < 3) throw ValidationError("gen_random_cnf needs n >= 3");
    if (m < 1) throw ValidationError("gen_random_cnf needs m >= 1");
    SplitMix64 rng(seed);
    CnfFormula f;
    f.variable_count = n;
    for (int i = 0; i < m; ++i) {
        std::array<int, 3> vars{};
        vars[0] = rng.range(1, n);
        do vars[1] = rng.range(1, n); while (vars[1] == vars[0]);
        do vars[2] = rng.range(1, n); while (vars[2] == vars[0] || vars[2] == vars[1]);
        std::sort(vars.begin(), vars.end());
        std::array<int, 3> clause{};
        for (int p = 0; p < 3; ++p) clause[static_cast<std::size_t>(p)] = rng.chance(0.5) ? vars[static_cast<std::size_t>(p)] : -vars[static_cast<std::size_t>(p)];
        f.clauses.push_back(clause);
    }
    return f;
}

MulticolorGraph gen_random_mcp(int k, int q, double edge_prob, std::uint64_t seed) {
    if (k < 2) throw ValidationError("gen_random_mcp needs k >= 2");
    if (q < 1) throw ValidationError("gen_random_mcp needs q >= 1");
    SplitMix64 rng(seed);
    MulticolorGraph g;
    g.color_count = k;
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= q; ++p) {
            g.vertices.add("v." + std::to_string(i) + "." + std::to_string(p));
            g.color.push_back(i - 1);
        }
    int total = g.vertices.size();
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (g.color[static_cast<std::size_t>(u)] != g.color[static_cast<std::size_t>(v)] && rng.chance(edge_prob))
                g.edges.emplace_back(u, v);
    return g;
}

GimInstance gen_random_gim(int k, int n, int triple_count, std::uint64_t seed) {
    if (k < 1) throw ValidationError("gen_random_gim needs k >= 1");
    if (n < k) throw ValidationError("gen_random_gim needs n >= k");
    if (triple_count < 0) throw ValidationError("gen_random_gim needs triple_count >= 0");
    SplitMix64 rng(seed);
    GimInstance inst;
    for (int i = 1; i <= n; ++i) inst.elements.add("e" + std::to_string(i));
    // contiguous chains, sizes as even as possible, longer ones first
    std::vector<std::pair<int, int>> chains;  // [start, end) element ranges
    int start = 0;
    for (int c = 0; c < k; ++c) {
        int len = n / k + (c < n % k ? 1 : 0);
        chains.emplace_back(start, start + len);
        for (int e = start; e + 1 < start + len; ++e) inst.pairs.emplace_back(e, e + 1);
        start += len;
    }
    std::vector<int> eligible;
    for (int c = 0; c < k; ++c)
        if (chains[static_cast<std::size_t>(c)].second - chains[static_cast<std::size_t>(c)].first >= 2)
            eligible.push_back(c);
    if (eligible.empty() || n < 3) return inst;
    std::set<std::array<int, 3>> seen;
    int attempts = 20 * triple_count + 100;
    while (static_cast<int>(inst.triples.size()) < triple_count && attempts-- > 0) {
        auto [lo, hi] = chains[static_cast<std::size_t>(eligible[static_cast<std::size_t>(rng.below(eligible.size()))])];
        int y = rng.range(lo, hi - 1);
        int z = rng.range(lo, hi - 1);
        if (y == z) continue;
        if (y > z) std::swap(y, z);
        int x = rng.range(0, n - 1);
        if (x == y || x == z) continue;
        std::array<int, 3> tr{x, y, z};
        if (seen.insert(tr).second) inst.triples.push_back(tr);
    }
    return inst;
}

LtreeInstance gen_random_ltree(int n, double extra_edge_prob, std::uint64_t seed) {
    if (n < 1) throw ValidationError("gen_random_ltree needs n >= 1");
    SplitMix64 rng(seed);
    LtreeInstance out;
    Graph& g = out.graph;
    std::vector<int> parent;
    for (int i = 1; i <= n; ++i) {
        g.add_vertex("v" + std::to_string(i));
        parent.push_back(i == 1 ? -1 : rng.range(0, i - 2));
    }
    for (int v = 1; v < n; ++v) g.add_edge(v, parent[static_cast<std::size_t>(v)]);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.chance(extra_edge_prob)) g.add_edge(u, v);
    out.tree = RootedSpanningTree::from_parents(0, std::move(parent));
    return out;
}

}  // namespace ltw
