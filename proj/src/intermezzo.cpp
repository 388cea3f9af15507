#include "ltw/intermezzo.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_set>

namespace ltw {

namespace {

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<long long>::max() / b) return std::numeric_limits<long long>::max();
    return a * b;
}

}  // namespace

std::vector<std::string> validate_gim(const GimInstance& inst, bool plain) {
    std::vector<std::string> defects;
    const int n = inst.elements.size();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    for (auto [x, y] : inst.pairs) {
        if (!in_range(x) || !in_range(y)) {
            defects.push_back("pair with unknown element");
            continue;
        }
        if (x == y) defects.push_back("pair with equal components: " + inst.elements.name(x));
    }
    for (const auto& t : inst.triples) {
        if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2])) {
            defects.push_back("triple with unknown element");
            continue;
        }
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            defects.push_back("triple with repeated element: " + inst.elements.name(t[0]) + " " +
                              inst.elements.name(t[1]) + " " + inst.elements.name(t[2]));
    }
    if (plain) {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < inst.triples.size(); ++i) {
            for (int v : inst.triples[i]) {
                if (!in_range(v)) continue;
                if (owner[static_cast<std::size_t>(v)] >= 0)
                    defects.push_back("element " + inst.elements.name(v) +
                                      " shared by two triples");
                else
                    owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
    }
    return defects;
}

InducedOrder induced_order(const GimInstance& inst) {
    std::vector<std::pair<int, int>> pairs = inst.pairs;
    for (const auto& t : inst.triples) pairs.emplace_back(t[1], t[2]);
    OrderBuild build = build_order(inst.elements, pairs);
    InducedOrder out;
    out.consistent = build.ok;
    out.order = std::move(build.order);
    out.cycle = std::move(build.cycle);
    return out;
}

bool verify_ordering(const GimInstance& inst, const Ordering& order) {
    if (order.length() != inst.elements.size()) return false;
    auto at = [&order](int v) { return order.pos[static_cast<std::size_t>(v)]; };
    for (auto [x, y] : inst.pairs)
        if (at(x) >= at(y)) return false;
    for (const auto& t : inst.triples) {
        int px = at(t[0]), py = at(t[1]), pz = at(t[2]);
        bool before = px < py && py < pz;
        bool after = py < pz && pz < px;
        if (!before && !after) return false;
    }
    return true;
}

namespace {

struct PrefixSearch {
    const GimInstance& inst;
    long long budget;
    std::vector<std::vector<int>> succ;                  // Hasse cover successors
    std::vector<int> predcnt;                            // unplaced cover predecessors
    std::vector<std::vector<std::pair<int, int>>> lead;  // (y, z) per triple led by x
    std::vector<std::vector<std::pair<int, int>>> mid;   // (x, z) per triple with middle y
    std::vector<char> placed;
    std::vector<int> seq;
    // Stack of forced edges z -> x: once y is placed the pattern x<y<z is dead,
    // so any completion must put z before x. Edges persist until backtracked.
    std::vector<std::pair<int, int>> waits;
    std::vector<int> indeg, topo, touched;
    std::vector<std::vector<int>> wadj;
    // A prefix behaves as its placed set alone: predecessor counts, active
    // waits, and appendability ignore placement order. Placed sets are always
    // downsets of the induced order, so per-chain prefix counts key them
    // exactly; proven-dead keys are memoized to turn the tree into a dag.
    std::vector<long long> stride_of;  // per element, stride of its chain
    long long state = 0;
    bool memo_on = false;
    std::unordered_set<long long> dead;
    static constexpr std::size_t kMemoCap = std::size_t{1} << 22;
    long long nodes = 0;
    bool out_of_budget = false;

    PrefixSearch(const GimInstance& instance, const PartialOrder& order,
                 const ChainPartition& part, long long node_budget)
        : inst(instance), budget(node_budget) {
        const int n = inst.elements.size();
        succ.assign(static_cast<std::size_t>(n), {});
        predcnt.assign(static_cast<std::size_t>(n), 0);
        lead.assign(static_cast<std::size_t>(n), {});
        mid.assign(static_cast<std::size_t>(n), {});
        placed.assign(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : hasse(order).cover_edges) {
            succ[static_cast<std::size_t>(a)].push_back(b);
            ++predcnt[static_cast<std::size_t>(b)];
        }
        for (const auto& t : inst.triples) {
            lead[static_cast<std::size_t>(t[0])].emplace_back(t[1], t[2]);
            mid[static_cast<std::size_t>(t[1])].emplace_back(t[0], t[2]);
        }
        seq.reserve(static_cast<std::size_t>(n));
        waits.reserve(inst.triples.size());
        indeg.assign(static_cast<std::size_t>(n), 0);
        topo.reserve(static_cast<std::size_t>(n));
        wadj.assign(static_cast<std::size_t>(n), {});
        stride_of.assign(static_cast<std::size_t>(n), 0);
        long long count = 1;
        for (const auto& chain : part.chains) {
            for (int v : chain) stride_of[static_cast<std::size_t>(v)] = count;
            count = sat_mul(count, static_cast<long long>(chain.size()) + 1);
        }
        memo_on = count < std::numeric_limits<long long>::max();
    }

    bool appendable(int x) const {
        if (placed[static_cast<std::size_t>(x)] || predcnt[static_cast<std::size_t>(x)] > 0)
            return false;
        // x may not land strictly between y and z for any triple it leads.
        for (auto [y, z] : lead[static_cast<std::size_t>(x)])
            if (placed[static_cast<std::size_t>(y)] && !placed[static_cast<std::size_t>(z)])
                return false;
        return true;
    }

    // A cycle among unplaced elements in the forced relation (induced-order
    // edges plus accumulated waits) admits no completion: every member waits
    // on another forever. Detecting that at the node it forms, instead of
    // exponentially many placements later, keeps large chain gadgets tractable.
    bool viable() {
        if (waits.empty()) return true;
        const int n = inst.elements.size();
        const int unplaced = n - static_cast<int>(seq.size());
        topo.clear();
        for (int v = 0; v < n; ++v)
            if (!placed[static_cast<std::size_t>(v)])
                indeg[static_cast<std::size_t>(v)] = predcnt[static_cast<std::size_t>(v)];
        for (auto [z, x] : waits) {
            if (placed[static_cast<std::size_t>(z)] || placed[static_cast<std::size_t>(x)])
                continue;
            if (wadj[static_cast<std::size_t>(z)].empty()) touched.push_back(z);
            wadj[static_cast<std::size_t>(z)].push_back(x);
            ++indeg[static_cast<std::size_t>(x)];
        }
        for (int v = 0; v < n; ++v)
            if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0)
                topo.push_back(v);
        for (std::size_t i = 0; i < topo.size(); ++i) {
            int u = topo[i];
            for (int v : succ[static_cast<std::size_t>(u)])
                if (!placed[static_cast<std::size_t>(v)] &&
                    --indeg[static_cast<std::size_t>(v)] == 0)
                    topo.push_back(v);
            for (int v : wadj[static_cast<std::size_t>(u)])
                if (--indeg[static_cast<std::size_t>(v)] == 0) topo.push_back(v);
        }
        for (int z : touched) wadj[static_cast<std::size_t>(z)].clear();
        touched.clear();
        return static_cast<int>(topo.size()) == unplaced;
    }

    void place(int x) {
        placed[static_cast<std::size_t>(x)] = 1;
        seq.push_back(x);
        state += stride_of[static_cast<std::size_t>(x)];
        for (int c : succ[static_cast<std::size_t>(x)]) --predcnt[static_cast<std::size_t>(c)];
        for (auto [w, z] : mid[static_cast<std::size_t>(x)])
            if (!placed[static_cast<std::size_t>(w)] && !placed[static_cast<std::size_t>(z)])
                waits.emplace_back(z, w);
    }

    void unplace(int x, std::size_t wait_mark) {
        waits.resize(wait_mark);
        for (int c : succ[static_cast<std::size_t>(x)]) ++predcnt[static_cast<std::size_t>(c)];
        state -= stride_of[static_cast<std::size_t>(x)];
        seq.pop_back();
        placed[static_cast<std::size_t>(x)] = 0;
    }

    bool known_dead() const { return memo_on && dead.count(state) > 0; }

    void mark_dead() {
        if (memo_on && dead.size() < kMemoCap) dead.insert(state);
    }

    bool dfs() {
        const int n = inst.elements.size();
        if (static_cast<int>(seq.size()) == n) return true;
        for (int x = 0; x < n; ++x) {
            if (!appendable(x)) continue;
            if (nodes == budget) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            std::size_t wait_mark = waits.size();
            place(x);
            if (!known_dead()) {
                if (viable()) {
                    if (dfs()) return true;
                } else {
                    mark_dead();
                }
            }
            unplace(x, wait_mark);
            if (out_of_budget) return false;
        }
        if (!out_of_budget) mark_dead();
        return false;
    }
};

}  // namespace

SolveResult solve_backtracking(const GimInstance& inst, long long budget) {
    SolveResult res;
    InducedOrder ind = induced_order(inst);
    // A cycle in the forced pairs leaves its members permanently unappendable,
    // so the search space is empty.
    if (!ind.consistent) return res;
    PrefixSearch search(inst, ind.order, chain_partition(ind.order), budget);
    if (search.dfs()) {
        res.status = SolveStatus::Feasible;
        res.witness = Ordering::from_sequence(search.seq, inst.elements.size());
        assert(verify_ordering(inst, *res.witness));
    } else {
        res.status = search.out_of_budget ? SolveStatus::ResourceExceeded : SolveStatus::Infeasible;
    }
    res.stats.nodes = search.nodes;
    return res;
}

long long DpTable::index_of(const std::vector<int>& tuple) const {
    long long idx = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) idx += strides[i] * tuple[i];
    return idx;
}

std::vector<int> DpTable::tuple_of(long long index) const {
    std::vector<int> tuple(chain_lengths.size(), 0);
    for (int i = static_cast<int>(chain_lengths.size()) - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(index / strides[static_cast<std::size_t>(i)]);
        index %= strides[static_cast<std::size_t>(i)];
    }
    return tuple;
}

SolveResult solve_dp(const GimInstance& inst, long long state_cap, DpTable* table_out) {
    SolveResult res;
    InducedOrder ind = induced_order(inst);
    if (!ind.consistent) return res;
    const int n = inst.elements.size();
    ChainPartition part = chain_partition(ind.order);
    const int k = static_cast<int>(part.chains.size());
    res.stats.width = k;
    long long bound = 1;
    for (int i = 0; i < k; ++i) bound = sat_mul(bound, n + 1);
    res.stats.dp_bound = bound;

    DpTable table;
    table.chains = part.chains;
    table.strides.resize(static_cast<std::size_t>(k));
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        table.chain_lengths.push_back(static_cast<int>(table.chains[static_cast<std::size_t>(i)].size()));
        table.strides[static_cast<std::size_t>(i)] = count;
        count = sat_mul(count, table.chain_lengths.back() + 1);
    }
    table.state_count = count;
    res.stats.dp_states = count;
    if (count > state_cap) {
        res.status = SolveStatus::ResourceExceeded;
        return res;
    }

    std::vector<int> chain_of(static_cast<std::size_t>(n), -1);
    std::vector<int> pos_in(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < k; ++i) {
        const auto& chain = table.chains[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < chain.size(); ++j) {
            chain_of[static_cast<std::size_t>(chain[j])] = i;
            pos_in[static_cast<std::size_t>(chain[j])] = static_cast<int>(j);
        }
    }
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    for (auto [a, b] : ind.order.strict_pairs()) preds[static_cast<std::size_t>(b)].push_back(a);
    std::vector<std::vector<std::pair<int, int>>> lead(static_cast<std::size_t>(n));
    for (const auto& t : inst.triples) lead[static_cast<std::size_t>(t[0])].emplace_back(t[1], t[2]);

    table.entries.assign(static_cast<std::size_t>(count), 0);
    table.entries[0] = DpTable::kRootEntry;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    auto in_prefix = [&](int u) {
        return pos_in[static_cast<std::size_t>(u)] < digits[static_cast<std::size_t>(chain_of[static_cast<std::size_t>(u)])];
    };
    long long reachable = 0;
    for (long long s = 0; s < count; ++s) {
        if (s > 0) {
            // Odometer step keeps digits equal to tuple_of(s) without divisions.
            for (int i = 0; i < k; ++i) {
                if (++digits[static_cast<std::size_t>(i)] <= table.chain_lengths[static_cast<std::size_t>(i)]) break;
                digits[static_cast<std::size_t>(i)] = 0;
            }
        }
        if (table.entries[static_cast<std::size_t>(s)] == 0) continue;
        ++reachable;
        for (int i = 0; i < k; ++i) {
            int used = digits[static_cast<std::size_t>(i)];
            if (used >= table.chain_lengths[static_cast<std::size_t>(i)]) continue;
            int x = table.chains[static_cast<std::size_t>(i)][static_cast<std::size_t>(used)];
            bool ok = true;
            for (int p : preds[static_cast<std::size_t>(x)])
                if (!in_prefix(p)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (auto [y, z] : lead[static_cast<std::size_t>(x)])
                if (in_prefix(y) && !in_prefix(z)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            long long next = s + table.strides[static_cast<std::size_t>(i)];
            if (table.entries[static_cast<std::size_t>(next)] == 0)
                table.entries[static_cast<std::size_t>(next)] = static_cast<unsigned char>(1 + i);
        }
    }
    res.stats.dp_reachable = reachable;

    if (table.entries[static_cast<std::size_t>(count - 1)] != 0) {
        res.status = SolveStatus::Feasible;
        std::vector<int> seq;
        seq.reserve(static_cast<std::size_t>(n));
        std::vector<int> digs = table.tuple_of(count - 1);
        long long s = count - 1;
        while (s != 0) {
            int chain = table.entries[static_cast<std::size_t>(s)] - 1;
            int& d = digs[static_cast<std::size_t>(chain)];
            seq.push_back(table.chains[static_cast<std::size_t>(chain)][static_cast<std::size_t>(d - 1)]);
            --d;
            s -= table.strides[static_cast<std::size_t>(chain)];
        }
        std::reverse(seq.begin(), seq.end());
        res.witness = Ordering::from_sequence(std::move(seq), n);
        assert(verify_ordering(inst, *res.witness));
    } else {
        res.status = SolveStatus::Infeasible;
    }
    if (table_out) *table_out = std::move(table);
    return res;
}

GimInstance lower_pairs_to_triples(const GimInstance& inst) {
    if (inst.pairs.empty()) return inst;
    GimInstance out;
    out.elements = inst.elements;
    out.triples = inst.triples;
    int w = out.elements.add(out.elements.fresh("w"));
    for (auto [y, z] : inst.pairs) out.triples.push_back({w, y, z});
    return out;
}

}  // namespace ltw
