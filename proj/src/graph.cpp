#include "ltw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ltw {

int Graph::add_vertex(const std::string& name) {
    int id = vertices.add(name);
    if (static_cast<std::size_t>(id) >= adj.size()) adj.emplace_back();
    return id;
}

bool Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge at vertex " + vertices.name(u));
    if (has_edge(u, v)) return false;
    auto& au = adj[static_cast<std::size_t>(u)];
    auto& av = adj[static_cast<std::size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

bool Graph::has_edge(int u, int v) const {
    const auto& au = adj[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj) twice += a.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

RootedSpanningTree RootedSpanningTree::from_parents(int root, std::vector<int> parent) {
    RootedSpanningTree tree;
    tree.root = root;
    tree.parent = std::move(parent);
    tree.rebuild();
    return tree;
}

void RootedSpanningTree::rebuild() {
    const int n = size();
    children.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p >= 0) children[static_cast<std::size_t>(p)].push_back(v);
    }
    for (auto& c : children) std::sort(c.begin(), c.end());
    tin.assign(static_cast<std::size_t>(n), -1);
    tout.assign(static_cast<std::size_t>(n), -1);
    if (root < 0) return;
    int clock = 0;
    // Iterative Euler tour; second visit of a frame closes the interval.
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [v, closing] = stack.back();
        stack.pop_back();
        if (closing) {
            tout[static_cast<std::size_t>(v)] = clock++;
            continue;
        }
        tin[static_cast<std::size_t>(v)] = clock++;
        stack.emplace_back(v, true);
        const auto& kids = children[static_cast<std::size_t>(v)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, false);
    }
}

int RootedSpanningTree::height_edges() const {
    int best = 0;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (int c : children[static_cast<std::size_t>(v)]) stack.emplace_back(c, d + 1);
    }
    return best;
}

int RootedSpanningTree::branch_leaf_count() const {
    int count = 0;
    for (int v = 0; v < size(); ++v)
        if (v != root && children[static_cast<std::size_t>(v)].empty()) ++count;
    return count;
}

std::vector<std::pair<int, int>> RootedSpanningTree::tree_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size(); ++v) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p >= 0) out.emplace_back(p, v);
    }
    return out;
}

Ordering Ordering::from_sequence(std::vector<int> seq, int universe) {
    Ordering order;
    order.pos.assign(static_cast<std::size_t>(universe), -1);
    order.seq = std::move(seq);
    for (std::size_t i = 0; i < order.seq.size(); ++i) {
        int v = order.seq[i];
        if (v < 0 || v >= universe || order.pos[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("ordering is not a sequence of distinct known elements");
        order.pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return order;
}

std::vector<std::string> validate_instance(const Graph& graph, const RootedSpanningTree& tree) {
    std::vector<std::string> defects;
    const int n = graph.vertex_count();
    if (tree.size() != n) {
        defects.push_back("tree covers " + std::to_string(tree.size()) + " vertices, graph has " +
                          std::to_string(n));
        return defects;
    }
    if (tree.root < 0 || tree.root >= n) {
        defects.push_back("missing or unknown root");
        return defects;
    }
    if (tree.parent[static_cast<std::size_t>(tree.root)] != -1)
        defects.push_back("root " + graph.vertices.name(tree.root) + " has a parent link");
    for (int v = 0; v < n; ++v) {
        if (v == tree.root) continue;
        int p = tree.parent[static_cast<std::size_t>(v)];
        if (p < 0 || p >= n) {
            defects.push_back("disconnected: vertex " + graph.vertices.name(v) + " has no parent");
            continue;
        }
        if (!graph.has_edge(v, p))
            defects.push_back("non-edge parent link: " + graph.vertices.name(p) + " -> " +
                              graph.vertices.name(v));
    }
    if (!defects.empty()) return defects;
    // Parent map is total, so every walk either reaches the root or loops.
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    state[static_cast<std::size_t>(tree.root)] = 2;
    for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)] != 0) continue;
        std::vector<int> path;
        int w = v;
        while (state[static_cast<std::size_t>(w)] == 0) {
            state[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            w = tree.parent[static_cast<std::size_t>(w)];
        }
        if (state[static_cast<std::size_t>(w)] == 1) {
            std::string cycle = "cycle:";
            bool in_cycle = false;
            for (int u : path) {
                if (u == w) in_cycle = true;
                if (in_cycle) cycle += " " + graph.vertices.name(u);
            }
            defects.push_back(cycle);
        }
        for (int u : path) state[static_cast<std::size_t>(u)] = 2;
        if (!defects.empty()) return defects;
    }
    return defects;
}

ExtractResult extract_ltree(const Graph& graph, const Ordering& order) {
    const int n = graph.vertex_count();
    if (order.length() != n)
        throw std::invalid_argument("ordering does not cover the whole vertex set");
    ExtractResult res;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int i = 1; i < n; ++i) {
        int v = order.seq[static_cast<std::size_t>(i)];
        int best = -1;
        for (int w : graph.adj[static_cast<std::size_t>(v)]) {
            int pw = order.pos[static_cast<std::size_t>(w)];
            if (pw < i && (best == -1 || pw > order.pos[static_cast<std::size_t>(best)])) best = w;
        }
        if (best == -1) {
            res.stuck_vertex = v;
            return res;
        }
        parent[static_cast<std::size_t>(v)] = best;
    }
    res.tree = RootedSpanningTree::from_parents(order.seq[0], std::move(parent));
    return res;
}

std::optional<std::string> explain_ltree_violation(const Graph& graph,
                                                   const RootedSpanningTree& tree,
                                                   const Ordering& order) {
    const int n = graph.vertex_count();
    if (order.length() != n) return "order is not a permutation of the vertex set";
    if (order.seq[0] != tree.root)
        return "wrong start vertex: " + graph.vertices.name(order.seq[0]) + " instead of " +
               graph.vertices.name(tree.root);
    ExtractResult extracted = extract_ltree(graph, order);
    if (!extracted.ok())
        return "vertex " + graph.vertices.name(extracted.stuck_vertex) + " has no earlier neighbour";
    for (int v = 0; v < n; ++v) {
        int want = tree.parent[static_cast<std::size_t>(v)];
        int got = extracted.tree->parent[static_cast<std::size_t>(v)];
        if (want != got)
            return "parent mismatch at " + graph.vertices.name(v) + ": expected " +
                   (want < 0 ? std::string("none") : graph.vertices.name(want)) + ", got " +
                   (got < 0 ? std::string("none") : graph.vertices.name(got));
    }
    return std::nullopt;
}

bool verify_ltree_order(const Graph& graph, const RootedSpanningTree& tree, const Ordering& order) {
    if (order.length() != graph.vertex_count()) return false;
    return !explain_ltree_violation(graph, tree, order).has_value();
}

std::vector<Hook> find_hooks(const Graph& graph, const RootedSpanningTree& tree) {
    std::vector<Hook> hooks;
    for (auto [u, v] : graph.edge_list()) {
        if (tree.has_tree_edge(u, v)) continue;
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            int z = tree.parent[static_cast<std::size_t>(x)];
            if (z < 0) continue;
            if (tree.is_ancestor(z, y) && !tree.is_ancestor(x, y)) hooks.push_back({x, y, z});
        }
    }
    std::sort(hooks.begin(), hooks.end(),
              [](const Hook& a, const Hook& b) { return std::tie(a.point, a.eye) < std::tie(b.point, b.eye); });
    return hooks;
}

std::vector<UBend> find_ubends(const Graph& graph, const RootedSpanningTree& tree) {
    std::vector<UBend> bends;
    for (auto [u, v] : graph.edge_list()) {
        if (tree.has_tree_edge(u, v)) continue;
        int pu = tree.parent[static_cast<std::size_t>(u)];
        int pv = tree.parent[static_cast<std::size_t>(v)];
        if (pu < 0 || pv < 0) continue;
        bends.push_back({u, pu, v, pv});
    }
    std::sort(bends.begin(), bends.end(), [](const UBend& a, const UBend& b) {
        return std::tie(a.child_a, a.child_b) < std::tie(b.child_a, b.child_b);
    });
    return bends;
}

Ordering dfs_order(const RootedSpanningTree& tree) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(tree.size()));
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        seq.push_back(v);
        const auto& kids = tree.children[static_cast<std::size_t>(v)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return Ordering::from_sequence(std::move(seq), tree.size());
}

}  // namespace ltw
