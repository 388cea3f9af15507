#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ltw/graph.hpp"
#include "ltw/order.hpp"

namespace ltw {

enum class RecStatus { Feasible, Infeasible, BudgetExhausted };

struct RecognitionResult {
    RecStatus status = RecStatus::Infeasible;
    std::optional<Ordering> witness;  // present iff feasible
    long long nodes_explored = 0;
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

// Constraints every accepted search order satisfies: ancestors before
// descendants, and for every hook the point before both the eye and the eye's
// parent. A failed build (cycle) proves no accepted order exists; the
// converse does not hold.
OrderBuild necessity_order(const Graph& graph, const RootedSpanningTree& tree);

// Fast path: with no hooks the plain tree preorder is an accepted order.
// nullopt means the fast path does not apply, not that the instance fails.
std::optional<Ordering> decide_hookfree(const Graph& graph, const RootedSpanningTree& tree);

// Exact decision by depth-first search over order prefixes. A vertex may be
// appended only when all its necessity predecessors are placed and appending
// it would not doom some unplaced vertex whose parent is already placed.
// Every committed placement costs one node of budget; infeasible is reported
// only after the whole space is exhausted.
RecognitionResult recognize_rooted(const Graph& graph, const RootedSpanningTree& tree,
                                   long long budget = kDefaultSearchBudget);

// Orients an undirected spanning tree at the chosen root.
// Throws ValidationError when the edges do not form a spanning tree.
RootedSpanningTree orient_tree(int root, int vertex_count,
                               const std::vector<std::pair<int, int>>& edges);

struct UnrootedResult {
    RecognitionResult result;
    int root = -1;  // accepted root, set iff feasible
};

// Tries every vertex as root in index order, sharing one node budget.
UnrootedResult recognize_unrooted(const Graph& graph,
                                  const std::vector<std::pair<int, int>>& tree_edges,
                                  long long budget = kDefaultSearchBudget);

}  // namespace ltw
