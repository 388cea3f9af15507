#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltw/graph.hpp"
#include "ltw/names.hpp"
#include "ltw/order.hpp"

namespace ltw {

// Constraint instance over an ordered element set: a pair (x, y) demands x
// before y; a triple (x, y, z) demands x-y-z or y-z-x, so x may never sit
// strictly between y and z.
struct GimInstance {
    NameTable elements;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::array<int, 3>> triples;
};

// Defect descriptions; empty means usable. plain additionally demands
// pairwise disjoint triples (no element shared between two triples).
std::vector<std::string> validate_gim(const GimInstance& inst, bool plain);

struct InducedOrder {
    bool consistent = false;
    PartialOrder order;      // valid iff consistent
    std::vector<int> cycle;  // valid iff not consistent
};

// Closure of the pairs plus (y, z) per triple: the comparabilities every
// solution must extend. Inconsistency proves infeasibility; consistency
// alone proves nothing.
InducedOrder induced_order(const GimInstance& inst);

// Pre: order is a permutation of the elements.
bool verify_ordering(const GimInstance& inst, const Ordering& order);

enum class SolveStatus { Feasible, Infeasible, ResourceExceeded };

struct SolveStats {
    long long nodes = 0;         // backtracking: committed placements
    long long dp_states = 0;     // dp: exact table size, product of (len_i + 1)
    long long dp_reachable = 0;  // dp: states reached by valid prefixes
    long long dp_bound = 0;      // dp: (n + 1)^width, saturated
    int width = 0;               // dp: chain count of the induced order
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Ordering> witness;  // present iff feasible
    SolveStats stats;
};

inline constexpr long long kDefaultSolveBudget = 10'000'000;
inline constexpr long long kDefaultStateCap = 1LL << 27;

// Exact decision by depth-first search over prefixes: an element is
// appendable when all its induced-order predecessors are placed and no triple
// led by it has the middle element placed but the last one missing.
SolveResult solve_backtracking(const GimInstance& inst, long long budget = kDefaultSolveBudget);

// Reachability table over chain prefix counts, mixed-radix indexed. An entry
// is 0 when unreachable, kRootEntry for the empty state, else 1 + the chain
// whose element was appended last. Chain indices stay below 254 because the
// table size doubles per chain and hits the cap long before that.
struct DpTable {
    static constexpr unsigned char kRootEntry = 255;

    std::vector<std::vector<int>> chains;  // disjoint cover, each ascending
    std::vector<int> chain_lengths;
    std::vector<long long> strides;  // index step per chain
    std::vector<unsigned char> entries;
    long long state_count = 0;

    long long index_of(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of(long long index) const;
};

// Exact decision over prefix-count states of a minimum chain partition of the
// induced order. Never allocates past state_cap; reports resource-exceeded
// instead. table_out, when given, receives the filled table.
SolveResult solve_dp(const GimInstance& inst, long long state_cap = kDefaultStateCap,
                     DpTable* table_out = nullptr);

// Replaces every pair (y, z) by a triple (w, y, z) with one shared fresh
// element w; w can always open the ordering, so feasibility is unchanged.
// Instances without pairs come back untouched.
GimInstance lower_pairs_to_triples(const GimInstance& inst);

}  // namespace ltw
