#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ltw/graph.hpp"
#include "ltw/intermezzo.hpp"
#include "ltw/reductions.hpp"

namespace ltw {

// Parsed ".lti" instance. Tree lines are kept as written (parent first);
// a missing root line means the rooting is free.
struct LtiFile {
    Graph graph;
    std::vector<std::pair<int, int>> tree_edges;
    int root = -1;

    bool rooted() const { return root >= 0; }
    // Orients the tree edges away from the given root (defaults to the
    // declared one). Throws ValidationError if they do not span the graph.
    RootedSpanningTree resolve_tree() const;
    RootedSpanningTree resolve_tree(int chosen_root) const;
};

LtiFile read_lti(std::istream& in);
void write_lti(std::ostream& out, const Graph& graph,
               const std::vector<std::pair<int, int>>& tree_edges, int root);

GimInstance read_imz(std::istream& in);
void write_imz(std::ostream& out, const GimInstance& inst);

MulticolorGraph read_mcg(std::istream& in);
void write_mcg(std::ostream& out, const MulticolorGraph& g);

CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& formula);

WitnessMap read_map(std::istream& in);
void write_map(std::ostream& out, const WitnessMap& map);

// Whitespace-separated names resolved against a name table.
// Throws ParseError on unknown names and ValidationError if the tokens do
// not form a permutation of the table.
Ordering read_order(std::istream& in, const NameTable& names);
void write_order(std::ostream& out, const NameTable& names, const Ordering& order);

// Convenience wrappers; failures carry the path in the message.
LtiFile read_lti_file(const std::string& path);
GimInstance read_imz_file(const std::string& path);
MulticolorGraph read_mcg_file(const std::string& path);
CnfFormula read_dimacs_file(const std::string& path);
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

}  // namespace ltw
