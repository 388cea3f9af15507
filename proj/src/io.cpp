#include "ltw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ltw/errors.hpp"
#include "ltw/recognition.hpp"

namespace ltw {
namespace {

int parse_int(const std::string& tok, const std::string& where) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(where + ": expected an integer, got '" + tok + "'");
    return value;
}

// line -> tokens, with everything from '#' on dropped
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    return toks;
}

void check_name(const std::string& name) {
    bool bad = name.empty() || name.find('#') != std::string::npos;
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') bad = true;
    if (bad) throw ValidationError("name not serializable: '" + name + "'");
}

[[noreturn]] void arity_error(int lineno, const std::string& directive) {
    throw ParseError("line " + std::to_string(lineno) + ": malformed '" + directive + "' line");
}

}  // namespace

RootedSpanningTree LtiFile::resolve_tree() const {
    if (!rooted()) throw ValidationError("instance declares no root");
    return resolve_tree(root);
}

RootedSpanningTree LtiFile::resolve_tree(int chosen_root) const {
    return orient_tree(chosen_root, graph.vertex_count(), tree_edges);
}

LtiFile read_lti(std::istream& in) {
    LtiFile out;
    std::string line;
    int lineno = 0;
    std::string root_name;
    auto add_pair_line = [&out, &lineno](const std::vector<std::string>& toks, bool tree) {
        int u = out.graph.add_vertex(toks[1]);
        int v = out.graph.add_vertex(toks[2]);
        try {
            out.graph.add_edge(u, v);
        } catch (const std::invalid_argument&) {
            throw ParseError("line " + std::to_string(lineno) + ": loop edge at '" + toks[1] + "'");
        }
        if (tree) out.tree_edges.emplace_back(u, v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "root") {
            if (toks.size() != 2) arity_error(lineno, "root");
            if (!root_name.empty())
                throw ParseError("line " + std::to_string(lineno) + ": repeated root line");
            root_name = toks[1];
            out.graph.add_vertex(root_name);
        } else if (toks[0] == "tree" || toks[0] == "edge") {
            if (toks.size() != 3) arity_error(lineno, toks[0]);
            add_pair_line(toks, toks[0] == "tree");
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!root_name.empty()) out.root = *out.graph.vertices.find(root_name);
    return out;
}

void write_lti(std::ostream& out, const Graph& graph,
               const std::vector<std::pair<int, int>>& tree_edges, int root) {
    for (int v = 0; v < graph.vertex_count(); ++v) check_name(graph.vertices.name(v));
    if (root >= 0) out << "root " << graph.vertices.name(root) << "\n";
    std::vector<std::pair<int, int>> in_tree;
    for (auto [p, c] : tree_edges) {
        out << "tree " << graph.vertices.name(p) << " " << graph.vertices.name(c) << "\n";
        in_tree.emplace_back(std::min(p, c), std::max(p, c));
    }
    std::sort(in_tree.begin(), in_tree.end());
    for (auto [u, v] : graph.edge_list())
        if (!std::binary_search(in_tree.begin(), in_tree.end(), std::make_pair(u, v)))
            out << "edge " << graph.vertices.name(u) << " " << graph.vertices.name(v) << "\n";
}

GimInstance read_imz(std::istream& in) {
    GimInstance inst;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "elem") {
            if (toks.size() != 2) arity_error(lineno, "elem");
            inst.elements.add(toks[1]);
        } else if (toks[0] == "pair") {
            if (toks.size() != 3) arity_error(lineno, "pair");
            int a = inst.elements.add(toks[1]);
            int b = inst.elements.add(toks[2]);
            inst.pairs.emplace_back(a, b);
        } else if (toks[0] == "triple") {
            if (toks.size() != 4) arity_error(lineno, "triple");
            int x = inst.elements.add(toks[1]);
            int y = inst.elements.add(toks[2]);
            int z = inst.elements.add(toks[3]);
            if (x == y || x == z || y == z)
                throw ParseError("line " + std::to_string(lineno) + ": triple with repeated element");
            inst.triples.push_back({x, y, z});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    return inst;
}

void write_imz(std::ostream& out, const GimInstance& inst) {
    for (int e = 0; e < inst.elements.size(); ++e) {
        check_name(inst.elements.name(e));
        out << "elem " << inst.elements.name(e) << "\n";
    }
    for (auto [a, b] : inst.pairs)
        out << "pair " << inst.elements.name(a) << " " << inst.elements.name(b) << "\n";
    for (const auto& t : inst.triples)
        out << "triple " << inst.elements.name(t[0]) << " " << inst.elements.name(t[1]) << " "
            << inst.elements.name(t[2]) << "\n";
}

MulticolorGraph read_mcg(std::istream& in) {
    MulticolorGraph g;
    bool have_colors = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        std::string where = "line " + std::to_string(lineno);
        if (toks[0] == "colors") {
            if (toks.size() != 2) arity_error(lineno, "colors");
            if (have_colors) throw ParseError(where + ": repeated colors line");
            g.color_count = parse_int(toks[1], where);
            have_colors = true;
        } else if (toks[0] == "vertex") {
            if (toks.size() != 3) arity_error(lineno, "vertex");
            if (g.vertices.contains(toks[1]))
                throw ParseError(where + ": repeated vertex '" + toks[1] + "'");
            g.vertices.add(toks[1]);
            g.color.push_back(parse_int(toks[2], where));
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) arity_error(lineno, "edge");
            auto u = g.vertices.find(toks[1]);
            auto v = g.vertices.find(toks[2]);
            if (!u || !v) throw ParseError(where + ": edge references an undeclared vertex");
            if (*u == *v) throw ParseError(where + ": loop edge at '" + toks[1] + "'");
            g.edges.emplace_back(std::min(*u, *v), std::max(*u, *v));
        } else {
            throw ParseError(where + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_colors) throw ParseError("missing colors line");
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

void write_mcg(std::ostream& out, const MulticolorGraph& g) {
    out << "colors " << g.color_count << "\n";
    for (int v = 0; v < g.vertices.size(); ++v) {
        check_name(g.vertices.name(v));
        out << "vertex " << g.vertices.name(v) << " " << g.color[static_cast<std::size_t>(v)] << "\n";
    }
    for (auto [u, v] : g.edges)
        out << "edge " << g.vertices.name(u) << " " << g.vertices.name(v) << "\n";
}

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    int declared_clauses = -1;
    std::vector<int> pending;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        std::string where = "line " + std::to_string(lineno);
        if (first == "c") continue;
        if (first == "%") break;
        if (first == "p") {
            if (declared_clauses >= 0) throw ParseError(where + ": repeated header");
            std::string kind, ntok, mtok;
            if (!(ss >> kind >> ntok >> mtok) || kind != "cnf")
                throw ParseError(where + ": malformed header, expected 'p cnf <vars> <clauses>'");
            f.variable_count = parse_int(ntok, where);
            declared_clauses = parse_int(mtok, where);
            continue;
        }
        if (declared_clauses < 0) throw ParseError(where + ": clause before header");
        std::string tok = first;
        do {
            int lit = parse_int(tok, where);
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(where + ": clause with " + std::to_string(pending.size()) +
                                     " literals; exactly three required");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                if (std::abs(lit) > f.variable_count)
                    throw ParseError(where + ": literal " + tok + " out of range");
                pending.push_back(lit);
            }
        } while (ss >> tok);
    }
    if (!pending.empty()) throw ParseError("unterminated final clause");
    if (declared_clauses < 0) throw ParseError("missing header");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    auto defects = validate_cnf(f);
    if (!defects.empty()) throw ParseError("invalid formula: " + defects.front());
    return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
    out << "p cnf " << formula.variable_count << " " << formula.clauses.size() << "\n";
    for (const auto& cl : formula.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
}

WitnessMap read_map(std::istream& in) {
    WitnessMap map;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "role" || toks.size() < 3 || toks.size() > 4)
            throw ParseError("line " + std::to_string(lineno) + ": malformed role line");
        map.add(toks[1], toks[2], toks.size() == 4 ? toks[3] : "");
    }
    return map;
}

void write_map(std::ostream& out, const WitnessMap& map) {
    for (const auto& role : map.roles) {
        check_name(role.tag);
        check_name(role.name);
        if (!role.source.empty()) check_name(role.source);
        out << "role " << role.tag << " " << role.name;
        if (!role.source.empty()) out << " " << role.source;
        out << "\n";
    }
}

Ordering read_order(std::istream& in, const NameTable& names) {
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(names.size()), false);
    std::string line;
    while (std::getline(in, line))
        for (const auto& tok : tokenize(line)) {
            auto id = names.find(tok);
            if (!id) throw ParseError("unknown element '" + tok + "' in order");
            if (used[static_cast<std::size_t>(*id)])
                throw ValidationError("element '" + tok + "' repeated in order");
            used[static_cast<std::size_t>(*id)] = true;
            seq.push_back(*id);
        }
    if (static_cast<int>(seq.size()) != names.size())
        throw ValidationError("order covers " + std::to_string(seq.size()) + " of " +
                              std::to_string(names.size()) + " elements");
    return Ordering::from_sequence(std::move(seq), names.size());
}

void write_order(std::ostream& out, const NameTable& names, const Ordering& order) {
    for (std::size_t i = 0; i < order.seq.size(); ++i) {
        check_name(names.name(order.seq[i]));
        out << (i ? " " : "") << names.name(order.seq[i]);
    }
    out << "\n";
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

LtiFile read_lti_file(const std::string& path) {
    auto in = open_input(path);
    return read_lti(in);
}

GimInstance read_imz_file(const std::string& path) {
    auto in = open_input(path);
    return read_imz(in);
}

MulticolorGraph read_mcg_file(const std::string& path) {
    auto in = open_input(path);
    return read_mcg(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
    auto in = open_input(path);
    return read_dimacs(in);
}

std::string slurp_file(const std::string& path) {
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << content;
    if (!out) throw ValidationError("write failed for '" + path + "'");
}

}  // namespace ltw
