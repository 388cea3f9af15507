#pragma once

#include <boost/dynamic_bitset.hpp>

#include <utility>
#include <vector>

#include "ltw/names.hpp"

namespace ltw {

using Bitset = boost::dynamic_bitset<>;

// Binary relation over an ordered element set; rows[i][j] holds iff (i, j) is
// in the relation. Rows always have exactly elements.size() bits.
struct Relation {
    NameTable elements;
    std::vector<Bitset> rows;

    explicit Relation(NameTable names = {});
    int size() const { return elements.size(); }
    void add_pair(int a, int b);
    bool has(int a, int b) const { return rows[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    std::vector<std::pair<int, int>> pairs() const;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.elements == b.elements && a.rows == b.rows;
    }
};

// Reflexive-transitive closure; input rows are left untouched.
Relation close_relation(const Relation& rel);

struct OrderCheck {
    bool ok = false;
    // On failure: one strongly connected set of mutually related elements,
    // ascending by index, size >= 2.
    std::vector<int> cycle;
};

// Antisymmetry check for a closed relation.
OrderCheck check_partial_order(const Relation& closed);

// Strict partial order: above[i][j] iff i < j in the order. Irreflexive,
// transitive and antisymmetric by construction (see make_partial_order).
struct PartialOrder {
    NameTable elements;
    std::vector<Bitset> above;

    int size() const { return elements.size(); }
    bool less(int a, int b) const { return above[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    std::vector<std::pair<int, int>> strict_pairs() const;
};

// Strips the diagonal from a closed, antisymmetric relation.
// Pre: check_partial_order(closed).ok
PartialOrder make_partial_order(const Relation& closed);

// Closure + antisymmetry check in one step, as most call sites want it.
struct OrderBuild {
    bool ok = false;
    PartialOrder order;        // valid iff ok
    std::vector<int> cycle;    // valid iff !ok
};
OrderBuild build_order(const NameTable& elements, const std::vector<std::pair<int, int>>& pairs);

struct HasseDiagram {
    NameTable elements;
    std::vector<std::pair<int, int>> cover_edges;  // (lower, upper), sorted
};

HasseDiagram hasse(const PartialOrder& order);

// Length, in elements, of a longest chain. Zero only for the empty order.
int height(const PartialOrder& order);

struct ChainPartition {
    // Disjoint chains covering every element, each ascending in the order.
    // Chain count equals the width of the order.
    std::vector<std::vector<int>> chains;
};

ChainPartition chain_partition(const PartialOrder& order);

int width(const PartialOrder& order);

// True iff the Hasse diagram is a tree rooted at a unique minimal element.
bool is_cs_tree(const PartialOrder& order);

}  // namespace ltw
