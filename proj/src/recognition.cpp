#include "ltw/recognition.hpp"

#include <algorithm>
#include <cassert>

#include "ltw/errors.hpp"

namespace ltw {

OrderBuild necessity_order(const Graph& graph, const RootedSpanningTree& tree) {
    std::vector<std::pair<int, int>> pairs = tree.tree_edges();
    for (const Hook& h : find_hooks(graph, tree)) {
        pairs.emplace_back(h.point, h.eye);
        // The non-tree edge also interleaves point and eye with their
        // parents, which pins the point below the eye's parent.
        int eye_parent = tree.parent[static_cast<std::size_t>(h.eye)];
        assert(eye_parent >= 0 && eye_parent != h.point);
        pairs.emplace_back(h.point, eye_parent);
    }
    return build_order(graph.vertices, pairs);
}

std::optional<Ordering> decide_hookfree(const Graph& graph, const RootedSpanningTree& tree) {
    if (!find_hooks(graph, tree).empty()) return std::nullopt;
    return dfs_order(tree);
}

namespace {

struct RootedSearch {
    const Graph& graph;
    const RootedSpanningTree& tree;
    long long budget;
    std::vector<std::vector<int>> succ;  // strict necessity successors
    std::vector<int> predcnt;            // unplaced necessity predecessors
    std::vector<char> placed;
    std::vector<int> seq;
    long long nodes = 0;
    bool exhausted_budget = false;

    RootedSearch(const Graph& g, const RootedSpanningTree& t, const PartialOrder& nec,
                 long long b)
        : graph(g), tree(t), budget(b) {
        const int n = g.vertex_count();
        succ.assign(static_cast<std::size_t>(n), {});
        predcnt.assign(static_cast<std::size_t>(n), 0);
        placed.assign(static_cast<std::size_t>(n), 0);
        for (auto [a, c] : nec.strict_pairs()) {
            succ[static_cast<std::size_t>(a)].push_back(c);
            ++predcnt[static_cast<std::size_t>(c)];
        }
        seq.reserve(static_cast<std::size_t>(n));
    }

    // Appending v must not leave some unplaced u hanging: once a non-parent
    // neighbor of u lands after u's parent, u can never pick its parent as
    // rightmost earlier neighbor again, so the whole branch is dead.
    bool dooms_someone(int v) const {
        for (int u : graph.adj[static_cast<std::size_t>(v)]) {
            if (placed[static_cast<std::size_t>(u)]) continue;
            int p = tree.parent[static_cast<std::size_t>(u)];
            if (p >= 0 && p != v && placed[static_cast<std::size_t>(p)]) return true;
        }
        return false;
    }

    void place(int v) {
        placed[static_cast<std::size_t>(v)] = 1;
        seq.push_back(v);
        for (int c : succ[static_cast<std::size_t>(v)]) --predcnt[static_cast<std::size_t>(c)];
    }

    void unplace(int v) {
        placed[static_cast<std::size_t>(v)] = 0;
        seq.pop_back();
        for (int c : succ[static_cast<std::size_t>(v)]) ++predcnt[static_cast<std::size_t>(c)];
    }

    bool dfs() {
        const int n = graph.vertex_count();
        if (static_cast<int>(seq.size()) == n) return true;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)] || predcnt[static_cast<std::size_t>(v)] > 0)
                continue;
            if (dooms_someone(v)) continue;
            if (nodes == budget) {
                exhausted_budget = true;
                return false;
            }
            ++nodes;
            place(v);
            if (dfs()) return true;
            unplace(v);
            if (exhausted_budget) return false;
        }
        return false;
    }
};

}  // namespace

RecognitionResult recognize_rooted(const Graph& graph, const RootedSpanningTree& tree,
                                   long long budget) {
    auto defects = validate_instance(graph, tree);
    if (!defects.empty()) throw ValidationError(defects.front());
    OrderBuild nec = necessity_order(graph, tree);
    RecognitionResult res;
    if (!nec.ok) {
        res.status = RecStatus::Infeasible;
        return res;
    }
    RootedSearch search(graph, tree, nec.order, budget);
    // Every non-root vertex waits at least for its parent, so the search can
    // only open with the root.
    if (search.dfs()) {
        res.status = RecStatus::Feasible;
        res.witness = Ordering::from_sequence(search.seq, graph.vertex_count());
    } else {
        res.status = search.exhausted_budget ? RecStatus::BudgetExhausted : RecStatus::Infeasible;
    }
    res.nodes_explored = search.nodes;
    return res;
}

RootedSpanningTree orient_tree(int root, int vertex_count,
                               const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != vertex_count - 1)
        throw ValidationError("tree edge count " + std::to_string(edges.size()) +
                              " does not fit " + std::to_string(vertex_count) + " vertices");
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(vertex_count));
    for (auto [u, v] : edges) {
        nbr[static_cast<std::size_t>(u)].push_back(v);
        nbr[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& ns : nbr) std::sort(ns.begin(), ns.end());
    std::vector<int> parent(static_cast<std::size_t>(vertex_count), -2);
    parent[static_cast<std::size_t>(root)] = -1;
    std::vector<int> stack{root};
    int seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbr[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = v;
            ++seen;
            stack.push_back(w);
        }
    }
    if (seen != vertex_count) throw ValidationError("tree edges do not connect all vertices");
    return RootedSpanningTree::from_parents(root, std::move(parent));
}

UnrootedResult recognize_unrooted(const Graph& graph,
                                  const std::vector<std::pair<int, int>>& tree_edges,
                                  long long budget) {
    UnrootedResult out;
    long long used = 0;
    for (int root = 0; root < graph.vertex_count(); ++root) {
        RootedSpanningTree tree = orient_tree(root, graph.vertex_count(), tree_edges);
        RecognitionResult res = recognize_rooted(graph, tree, budget - used);
        used += res.nodes_explored;
        if (res.status == RecStatus::Feasible) {
            out.result = std::move(res);
            out.result.nodes_explored = used;
            out.root = root;
            return out;
        }
        if (res.status == RecStatus::BudgetExhausted) {
            out.result.status = RecStatus::BudgetExhausted;
            out.result.nodes_explored = used;
            return out;
        }
    }
    out.result.status = RecStatus::Infeasible;
    out.result.nodes_explored = used;
    return out;
}

}  // namespace ltw
