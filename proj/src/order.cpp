#include "ltw/order.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ltw {

Relation::Relation(NameTable names) : elements(std::move(names)) {
    rows.assign(static_cast<std::size_t>(elements.size()),
                Bitset(static_cast<std::size_t>(elements.size())));
}

void Relation::add_pair(int a, int b) {
    rows.at(static_cast<std::size_t>(a)).set(static_cast<std::size_t>(b));
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (std::size_t j = rows[static_cast<std::size_t>(i)].find_first(); j != Bitset::npos;
             j = rows[static_cast<std::size_t>(i)].find_next(j))
            out.emplace_back(i, static_cast<int>(j));
    return out;
}

Relation close_relation(const Relation& rel) {
    Relation closed = rel;
    const std::size_t n = static_cast<std::size_t>(closed.size());
    for (std::size_t i = 0; i < n; ++i) closed.rows[i].set(i);
    // Worklist fixpoint: fold successor rows in until nothing grows. Rows only
    // gain bits, so each pass is monotone and the loop terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            Bitset merged = closed.rows[i];
            for (std::size_t j = closed.rows[i].find_first(); j != Bitset::npos;
                 j = closed.rows[i].find_next(j))
                merged |= closed.rows[j];
            if (merged != closed.rows[i]) {
                closed.rows[i] = std::move(merged);
                changed = true;
            }
        }
    }
    return closed;
}

OrderCheck check_partial_order(const Relation& closed) {
    const int n = closed.size();
    for (int i = 0; i < n; ++i) {
        std::vector<int> mutual;
        for (int j = 0; j < n; ++j) {
            if (i != j && closed.has(i, j) && closed.has(j, i)) mutual.push_back(j);
        }
        if (!mutual.empty()) {
            // All mutually reachable partners of the first offending element:
            // together with it they form one strongly connected component.
            OrderCheck res;
            res.cycle.push_back(i);
            res.cycle.insert(res.cycle.end(), mutual.begin(), mutual.end());
            std::sort(res.cycle.begin(), res.cycle.end());
            return res;
        }
    }
    return OrderCheck{true, {}};
}

PartialOrder make_partial_order(const Relation& closed) {
    PartialOrder order;
    order.elements = closed.elements;
    order.above = closed.rows;
    for (std::size_t i = 0; i < order.above.size(); ++i) order.above[i].reset(i);
    return order;
}

OrderBuild build_order(const NameTable& elements, const std::vector<std::pair<int, int>>& pairs) {
    Relation rel(elements);
    for (auto [a, b] : pairs) rel.add_pair(a, b);
    Relation closed = close_relation(rel);
    OrderCheck check = check_partial_order(closed);
    OrderBuild out;
    if (!check.ok) {
        out.cycle = std::move(check.cycle);
        return out;
    }
    out.ok = true;
    out.order = make_partial_order(closed);
    return out;
}

std::vector<std::pair<int, int>> PartialOrder::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (std::size_t j = above[static_cast<std::size_t>(i)].find_first(); j != Bitset::npos;
             j = above[static_cast<std::size_t>(i)].find_next(j))
            out.emplace_back(i, static_cast<int>(j));
    return out;
}

HasseDiagram hasse(const PartialOrder& order) {
    HasseDiagram diagram;
    diagram.elements = order.elements;
    const std::size_t n = static_cast<std::size_t>(order.size());
    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = order.above[a].find_first(); b != Bitset::npos;
             b = order.above[a].find_next(b))
            below[b].set(a);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = order.above[a].find_first(); b != Bitset::npos;
             b = order.above[a].find_next(b)) {
            // (a, b) is a cover iff nothing sits strictly between them.
            Bitset between = order.above[a];
            between &= below[b];
            if (between.none())
                diagram.cover_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    std::sort(diagram.cover_edges.begin(), diagram.cover_edges.end());
    return diagram;
}

int height(const PartialOrder& order) {
    const int n = order.size();
    // Longest chain by dynamic programming over a topological order of the
    // strict relation (Kahn on the closure; it is already a DAG).
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (std::size_t b = order.above[static_cast<std::size_t>(a)].find_first(); b != Bitset::npos;
             b = order.above[static_cast<std::size_t>(a)].find_next(b))
            ++indeg[b];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    std::vector<int> depth(static_cast<std::size_t>(n), 1);
    int best = n == 0 ? 0 : 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        for (std::size_t b = order.above[static_cast<std::size_t>(a)].find_first(); b != Bitset::npos;
             b = order.above[static_cast<std::size_t>(a)].find_next(b)) {
            depth[b] = std::max(depth[b], depth[static_cast<std::size_t>(a)] + 1);
            best = std::max(best, depth[b]);
            if (--indeg[b] == 0) queue.push_back(static_cast<int>(b));
        }
    }
    assert(static_cast<int>(queue.size()) == n && "strict order must be acyclic");
    return best;
}

namespace {

// Kuhn's augmenting-path matching. Left vertices are tried in ascending index
// order and right candidates likewise, which pins down the matching (and with
// it the chain partition) uniquely for a given order.
struct Matcher {
    const PartialOrder& order;
    std::vector<int> match_right;  // left -> matched right, or -1
    std::vector<int> match_left;   // right -> matched left, or -1
    std::vector<char> visited;

    explicit Matcher(const PartialOrder& o)
        : order(o),
          match_right(static_cast<std::size_t>(o.size()), -1),
          match_left(static_cast<std::size_t>(o.size()), -1),
          visited(static_cast<std::size_t>(o.size()), 0) {}

    bool augment(int u) {
        const Bitset& succ = order.above[static_cast<std::size_t>(u)];
        for (std::size_t v = succ.find_first(); v != Bitset::npos; v = succ.find_next(v)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_left[v] == -1 || augment(match_left[v])) {
                match_left[v] = u;
                match_right[static_cast<std::size_t>(u)] = static_cast<int>(v);
                return true;
            }
        }
        return false;
    }

    void run() {
        for (int u = 0; u < order.size(); ++u) {
            std::fill(visited.begin(), visited.end(), 0);
            augment(u);
        }
    }
};

}  // namespace

ChainPartition chain_partition(const PartialOrder& order) {
    // Dilworth via minimum path cover of the comparability DAG: the strict
    // relation is transitively closed, so n - |max matching| chains suffice
    // and equal the maximum antichain size.
    Matcher matcher(order);
    matcher.run();
    ChainPartition part;
    for (int head = 0; head < order.size(); ++head) {
        if (matcher.match_left[static_cast<std::size_t>(head)] != -1) continue;
        std::vector<int> chain;
        for (int v = head; v != -1; v = matcher.match_right[static_cast<std::size_t>(v)])
            chain.push_back(v);
        part.chains.push_back(std::move(chain));
    }
    return part;
}

int width(const PartialOrder& order) {
    return static_cast<int>(chain_partition(order).chains.size());
}

bool is_cs_tree(const PartialOrder& order) {
    const int n = order.size();
    if (n == 0) return false;
    HasseDiagram diagram = hasse(order);
    if (static_cast<int>(diagram.cover_edges.size()) != n - 1) return false;
    int minimal = 0;
    for (int v = 0; v < n; ++v) {
        bool has_pred = false;
        for (int u = 0; u < n && !has_pred; ++u) has_pred = u != v && order.less(u, v);
        if (!has_pred) ++minimal;
    }
    if (minimal != 1) return false;
    // n - 1 cover edges and connectivity make the Hasse diagram a tree.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : diagram.cover_edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace ltw
