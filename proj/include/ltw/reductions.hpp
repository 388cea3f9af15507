#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ltw/graph.hpp"
#include "ltw/intermezzo.hpp"
#include "ltw/names.hpp"

namespace ltw {

// 3-CNF formula. Literals are signed 1-based variable indices (+v / -v),
// three per clause, pairwise distinct variables within a clause.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;

    bool operator==(const CnfFormula&) const = default;
};

// Defects as human-readable strings; empty means valid.
std::vector<std::string> validate_cnf(const CnfFormula& formula);

// assignment[j-1] is the value of variable j.
bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

// Properly colored graph with equally sized color classes. Colors are
// 0-based; edges are stored normalized (u < v) and sorted.
struct MulticolorGraph {
    int color_count = 0;
    NameTable vertices;
    std::vector<int> color;
    std::vector<std::pair<int, int>> edges;

    int class_size() const;
    bool has_edge(int u, int v) const;

    bool operator==(const MulticolorGraph&) const = default;
};

std::vector<std::string> validate_mcp(const MulticolorGraph& g);

// Role-tagged names for every element a reduction synthesizes, so witnesses
// can be mapped back to source-problem objects. `source` names the original
// object the element stands for ("" if none).
struct WitnessMap {
    struct Role {
        std::string tag;
        std::string name;
        std::string source;

        bool operator==(const Role&) const = default;
    };
    std::vector<Role> roles;

    void add(std::string tag, std::string name, std::string source = "");

    bool operator==(const WitnessMap&) const = default;
};

struct SatLtreeReduction {
    Graph graph;
    RootedSpanningTree tree;
    WitnessMap map;
};

// 3-SAT to rooted L-tree recognition. Output has 2 + 2n + 19m vertices and
// tree height exactly 5; feasible iff the formula is satisfiable.
SatLtreeReduction sat_to_ltree(const CnfFormula& formula);

// Ordering of the reduced instance witnessing a satisfying assignment.
// Throws ValidationError if the assignment does not satisfy the formula.
Ordering order_from_assignment(const CnfFormula& formula,
                               const std::vector<bool>& assignment);

// Satisfying assignment read off a verified ordering of the reduced
// instance. Throws ValidationError if the ordering does not verify.
std::vector<bool> assignment_from_order(const CnfFormula& formula,
                                        const Graph& graph,
                                        const RootedSpanningTree& tree,
                                        const Ordering& order);

struct UnrootedLtreeReduction {
    Graph graph;
    std::vector<std::pair<int, int>> tree_edges;
    WitnessMap map;
};

// Root-elimination gadget: three fresh vertices forming a triangle attached
// to the old root. Unrooted feasibility of the output equals rooted
// feasibility of the input.
UnrootedLtreeReduction rooted_to_unrooted(const Graph& graph,
                                          const RootedSpanningTree& tree);

enum class GimVariant { Height, Width };

struct GimReduction {
    GimInstance instance;
    WitnessMap map;
};

// L-tree recognition to General Intermezzo (B empty). The induced order is
// a cs-tree. Height variant requires tree height >= 2.
GimReduction ltree_to_gim(const Graph& graph, const RootedSpanningTree& tree,
                          GimVariant variant);

struct LtreeFromGimReduction {
    Graph graph;
    RootedSpanningTree tree;
};

// Reverse direction: instance with B empty whose induced order is a
// cs-tree becomes an L-tree instance over the Hasse tree. Rejects inputs
// where some triple's first element lies on its own constraint path (such
// instances are infeasible outright and the construction would degenerate).
LtreeFromGimReduction gim_cstree_to_ltree(const GimInstance& inst);

// General Intermezzo to plain Intermezzo: per-element blocks plus splitter
// chains make all triples pairwise disjoint while preserving feasibility
// and, on cs-tree inputs, width.
GimReduction gim_to_im(const GimInstance& inst);

// Multicolor clique to General Intermezzo. B is emitted as native pairs;
// pass lower_pairs = true to fold B into triples via lower_pairs_to_triples.
GimReduction mcp_to_gim(const MulticolorGraph& g, bool lower_pairs = false);

// Multicolor clique read off a verified intermezzo ordering of the reduced
// instance (one vertex per color). Throws ValidationError if the ordering
// does not verify. Requires the instance as produced by mcp_to_gim with
// native pairs.
std::vector<int> clique_from_order(const MulticolorGraph& g,
                                   const GimInstance& inst,
                                   const Ordering& order);

}  // namespace ltw
