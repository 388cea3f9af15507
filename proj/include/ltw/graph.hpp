#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltw/names.hpp"

namespace ltw {

// Simple undirected graph. Edges are kept both as sorted adjacency lists and
// as a (u < v) edge list; re-adding an edge is a no-op.
struct Graph {
    NameTable vertices;
    std::vector<std::vector<int>> adj;

    int add_vertex(const std::string& name);
    // Returns false when the edge was already present. Loops are rejected.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int vertex_count() const { return vertices.size(); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices == b.vertices && a.adj == b.adj;
    }
};

// Spanning tree given by a parent map. Children lists and the Euler-tour
// intervals used for O(1) ancestor tests are filled in by rebuild().
struct RootedSpanningTree {
    int root = -1;
    std::vector<int> parent;  // -1 exactly at the root
    std::vector<std::vector<int>> children;
    std::vector<int> tin, tout;

    static RootedSpanningTree from_parents(int root, std::vector<int> parent);
    void rebuild();
    int size() const { return static_cast<int>(parent.size()); }
    bool is_ancestor(int anc, int desc) const {
        return tin[static_cast<std::size_t>(anc)] <= tin[static_cast<std::size_t>(desc)] &&
               tout[static_cast<std::size_t>(desc)] <= tout[static_cast<std::size_t>(anc)];
    }
    bool has_tree_edge(int u, int v) const {
        return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
    }
    int height_edges() const;
    int branch_leaf_count() const;  // childless vertices other than the root
    std::vector<std::pair<int, int>> tree_edges() const;  // (parent, child), by child

    friend bool operator==(const RootedSpanningTree& a, const RootedSpanningTree& b) {
        return a.root == b.root && a.parent == b.parent;
    }
};

// A vertex sequence together with its inverse; pos[v] is -1 for vertices that
// do not occur (never the case for a full ordering).
struct Ordering {
    std::vector<int> seq;
    std::vector<int> pos;

    static Ordering from_sequence(std::vector<int> seq, int universe);
    int length() const { return static_cast<int>(seq.size()); }
    bool placed(int v) const { return pos[static_cast<std::size_t>(v)] >= 0; }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq == b.seq; }
};

struct Hook {
    int point = -1;   // x: forced early
    int eye = -1;     // y: forced late
    int anchor = -1;  // z = parent(point)
    friend bool operator==(const Hook&, const Hook&) = default;
};

struct UBend {
    // Non-tree edge child_a-child_b whose endpoints both have parents; any
    // accepted order interleaves as parent_a, child_a, parent_b, child_b or
    // the mirror image.
    int child_a = -1, parent_a = -1;
    int child_b = -1, parent_b = -1;
    friend bool operator==(const UBend&, const UBend&) = default;
};

// Human-readable defect descriptions; empty means the pair is a valid
// recognition instance (tree edges exist in the graph, parents span, no cycle).
std::vector<std::string> validate_instance(const Graph& graph, const RootedSpanningTree& tree);

struct ExtractResult {
    std::optional<RootedSpanningTree> tree;
    int stuck_vertex = -1;  // first vertex with no earlier neighbour, if any
    bool ok() const { return tree.has_value(); }
};

// Last-in tree of an ordering: each vertex hangs from its rightmost earlier
// neighbour. Pre: order is a permutation of the vertices.
ExtractResult extract_ltree(const Graph& graph, const Ordering& order);

bool verify_ltree_order(const Graph& graph, const RootedSpanningTree& tree, const Ordering& order);

// Reason the order is not a search order with last-in tree `tree`, or nullopt
// when it verifies. verify_ltree_order is the boolean view of this.
std::optional<std::string> explain_ltree_violation(const Graph& graph,
                                                   const RootedSpanningTree& tree,
                                                   const Ordering& order);

// All hook configurations, sorted by (point, eye). Both orientations of every
// non-tree edge are tested.
std::vector<Hook> find_hooks(const Graph& graph, const RootedSpanningTree& tree);

// One U-bend per non-tree edge avoiding the root; child_a is the smaller
// endpoint. Sorted by (child_a, child_b).
std::vector<UBend> find_ubends(const Graph& graph, const RootedSpanningTree& tree);

// Preorder walk of the tree alone, children in index order.
Ordering dfs_order(const RootedSpanningTree& tree);

}  // namespace ltw
