#include "ltw/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "ltw/errors.hpp"
#include "ltw/order.hpp"

namespace ltw {
namespace {

std::string num(int v) { return std::to_string(v); }

void require_valid(std::vector<std::string> defects, const char* what) {
    if (!defects.empty())
        throw ValidationError(std::string(what) + ": " + defects.front());
}

}  // namespace

std::vector<std::string> validate_cnf(const CnfFormula& formula) {
    std::vector<std::string> defects;
    if (formula.variable_count < 0) defects.push_back("negative variable count");
    for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
        const auto& cl = formula.clauses[i];
        std::string where = "clause " + num(static_cast<int>(i) + 1);
        bool range_ok = true;
        for (int lit : cl) {
            int var = std::abs(lit);
            if (lit == 0 || var > formula.variable_count) {
                defects.push_back(where + ": literal out of range");
                range_ok = false;
                break;
            }
        }
        if (!range_ok) continue;
        if (std::abs(cl[0]) == std::abs(cl[1]) || std::abs(cl[0]) == std::abs(cl[2]) ||
            std::abs(cl[1]) == std::abs(cl[2]))
            defects.push_back(where + ": repeated variable");
    }
    return defects;
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
    assert(static_cast<int>(assignment.size()) == formula.variable_count);
    for (const auto& cl : formula.clauses) {
        bool sat = false;
        for (int lit : cl) {
            std::size_t var = static_cast<std::size_t>(std::abs(lit)) - 1;
            if (assignment[var] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

int MulticolorGraph::class_size() const {
    if (color_count <= 0) return 0;
    int q = 0;
    for (int c : color)
        if (c == 0) ++q;
    return q;
}

bool MulticolorGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::string> validate_mcp(const MulticolorGraph& g) {
    std::vector<std::string> defects;
    if (g.color_count < 1) defects.push_back("needs at least one color");
    if (static_cast<int>(g.color.size()) != g.vertices.size())
        defects.push_back("color list does not match the vertex set");
    if (!defects.empty()) return defects;
    std::vector<int> sizes(static_cast<std::size_t>(g.color_count), 0);
    for (int v = 0; v < g.vertices.size(); ++v) {
        int c = g.color[static_cast<std::size_t>(v)];
        if (c < 0 || c >= g.color_count) {
            defects.push_back("vertex " + g.vertices.name(v) + " has an unknown color");
            return defects;
        }
        ++sizes[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < g.color_count; ++c)
        if (sizes[static_cast<std::size_t>(c)] != sizes[0])
            defects.push_back("color classes differ in size");
    if (sizes[0] == 0) defects.push_back("empty color classes");
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertices.size() || v >= g.vertices.size()) {
            defects.push_back("edge endpoint out of range");
            continue;
        }
        if (u >= v) defects.push_back("edge list not normalized");
        else if (g.color[static_cast<std::size_t>(u)] == g.color[static_cast<std::size_t>(v)])
            defects.push_back("edge inside color class: " + g.vertices.name(u) + " " + g.vertices.name(v));
    }
    if (!std::is_sorted(g.edges.begin(), g.edges.end()) ||
        std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        defects.push_back("edge list not sorted and unique");
    return defects;
}

void WitnessMap::add(std::string tag, std::string name, std::string source) {
    roles.push_back(Role{std::move(tag), std::move(name), std::move(source)});
}

namespace {

// Shared skeleton of the formula gadget; order_from_assignment needs the
// same vertex indices sat_to_ltree hands out.
struct SatLayout {
    Graph graph;
    std::vector<int> parent;
    int root = -1, hub = -1;
    std::vector<std::array<int, 2>> lit;                       // [j-1][side]
    std::vector<int> clause_vx;                                // [i-1]
    std::vector<std::array<int, 3>> tech_a, tech_b;            // [i-1][slot]
    std::vector<std::array<int, 3>> occ, tech_d, tech_e, tech_f;
    WitnessMap map;
};

SatLayout build_sat_layout(const CnfFormula& f) {
    require_valid(validate_cnf(f), "invalid formula");
    if (f.clauses.empty()) throw ValidationError("invalid formula: no clauses");
    const int n = f.variable_count;
    const int m = static_cast<int>(f.clauses.size());
    SatLayout L;
    auto vx = [&L](const std::string& name, int par, const char* tag, std::string source) {
        int v = L.graph.add_vertex(name);
        assert(v == static_cast<int>(L.parent.size()));
        L.parent.push_back(par);
        L.map.add(tag, name, std::move(source));
        return v;
    };
    L.root = vx("r", -1, "root", "");
    L.lit.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        L.lit[j - 1][0] = vx("x." + num(j) + "(0)", L.root, "literal", "X." + num(j));
        L.lit[j - 1][1] = vx("x." + num(j) + "(1)", L.root, "literal", "X." + num(j));
    }
    L.hub = vx("C", L.root, "hub", "");
    L.clause_vx.resize(static_cast<std::size_t>(m));
    L.tech_a.resize(static_cast<std::size_t>(m));
    L.tech_b.resize(static_cast<std::size_t>(m));
    L.occ.resize(static_cast<std::size_t>(m));
    L.tech_d.resize(static_cast<std::size_t>(m));
    L.tech_e.resize(static_cast<std::size_t>(m));
    L.tech_f.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const auto& cl = f.clauses[static_cast<std::size_t>(i - 1)];
        std::string ci = "c." + num(i);
        L.clause_vx[i - 1] = vx(ci, L.hub, "clause", "C." + num(i));
        for (int p = 0; p < 3; ++p) {
            L.tech_a[i - 1][p] = vx("a." + num(i) + "." + num(p), L.clause_vx[i - 1], "tech-a", ci);
            L.tech_b[i - 1][p] = vx("b." + num(i) + "." + num(p), L.tech_a[i - 1][p], "tech-b", ci);
        }
        for (int p = 0; p < 3; ++p) {
            int lit = cl[static_cast<std::size_t>(p)];
            int j = std::abs(lit);
            int side = lit > 0 ? 1 : 0;
            L.occ[i - 1][p] = vx("x." + num(j) + "^" + num(i), L.lit[j - 1][side], "occurrence", "X." + num(j));
            L.tech_d[i - 1][p] = vx("d." + num(i) + "." + num(j), L.occ[i - 1][p], "tech-d", ci);
            L.tech_e[i - 1][p] = vx("e." + num(i) + "." + num(j), L.tech_d[i - 1][p], "tech-e", ci);
            L.tech_f[i - 1][p] = vx("f." + num(i) + "." + num(j), L.tech_e[i - 1][p], "tech-f", ci);
        }
    }
    for (int v = 0; v < L.graph.vertex_count(); ++v)
        if (L.parent[static_cast<std::size_t>(v)] >= 0)
            L.graph.add_edge(v, L.parent[static_cast<std::size_t>(v)]);
    // every literal vertex attacks every clause vertex
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            L.graph.add_edge(L.lit[static_cast<std::size_t>(j)][0], L.clause_vx[static_cast<std::size_t>(i)]);
            L.graph.add_edge(L.lit[static_cast<std::size_t>(j)][1], L.clause_vx[static_cast<std::size_t>(i)]);
        }
    // occurrences of opposite literals of one variable conflict pairwise
    for (int j = 1; j <= n; ++j) {
        std::vector<int> pos_occ, neg_occ;
        for (int i = 0; i < m; ++i)
            for (int p = 0; p < 3; ++p) {
                int lit = f.clauses[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
                if (std::abs(lit) != j) continue;
                (lit > 0 ? pos_occ : neg_occ).push_back(L.occ[static_cast<std::size_t>(i)][p]);
            }
        for (int a : pos_occ)
            for (int b : neg_occ) L.graph.add_edge(a, b);
    }
    for (int i = 0; i < m; ++i)
        for (int p = 0; p < 3; ++p) {
            auto iu = static_cast<std::size_t>(i);
            L.graph.add_edge(L.hub, L.tech_e[iu][p]);
            L.graph.add_edge(L.clause_vx[iu], L.tech_e[iu][p]);
            L.graph.add_edge(L.tech_a[iu][p], L.tech_f[iu][p]);
            L.graph.add_edge(L.tech_b[iu][p], L.tech_e[iu][p]);
            L.graph.add_edge(L.tech_b[iu][p], L.tech_d[iu][(p + 1) % 3]);
        }
    assert(L.graph.vertex_count() == 2 + 2 * n + 19 * m);
    return L;
}

}  // namespace

SatLtreeReduction sat_to_ltree(const CnfFormula& formula) {
    SatLayout L = build_sat_layout(formula);
    SatLtreeReduction out;
    out.graph = std::move(L.graph);
    out.tree = RootedSpanningTree::from_parents(L.root, std::move(L.parent));
    out.map = std::move(L.map);
    return out;
}

Ordering order_from_assignment(const CnfFormula& formula, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != formula.variable_count)
        throw ValidationError("assignment length does not match the variable count");
    if (!satisfies(formula, assignment))
        throw ValidationError("assignment does not satisfy the formula");
    SatLayout L = build_sat_layout(formula);
    const int n = formula.variable_count;
    const int m = static_cast<int>(formula.clauses.size());
    // X_j true leaves the negative literal vertex false, and vice versa
    auto false_side = [&assignment](int j) { return assignment[static_cast<std::size_t>(j - 1)] ? 0 : 1; };
    auto literal_true = [&assignment](int lit) {
        return assignment[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0);
    };
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(L.graph.vertex_count()));
    seq.push_back(L.root);
    for (int j = 1; j <= n; ++j) seq.push_back(L.lit[static_cast<std::size_t>(j - 1)][false_side(j)]);
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < m; ++i)
            for (int p = 0; p < 3; ++p) {
                int lit = formula.clauses[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
                if (std::abs(lit) == j && !literal_true(lit))
                    seq.push_back(L.occ[static_cast<std::size_t>(i)][p]);
            }
    for (int j = 1; j <= n; ++j) seq.push_back(L.lit[static_cast<std::size_t>(j - 1)][1 - false_side(j)]);
    seq.push_back(L.hub);
    for (int i = 0; i < m; ++i) {
        auto iu = static_cast<std::size_t>(i);
        seq.push_back(L.clause_vx[iu]);
        std::vector<int> false_slots, true_slots;
        for (int p = 0; p < 3; ++p) {
            int lit = formula.clauses[iu][static_cast<std::size_t>(p)];
            (literal_true(lit) ? true_slots : false_slots).push_back(p);
        }
        // slot p's b-vertex attacks slot p+1's d-vertex, so of two false
        // slots the cyclic successor's block must be laid down first
        std::vector<int> false_order = false_slots;
        if (false_slots.size() == 2)
            false_order = (false_slots[1] == false_slots[0] + 1)
                              ? std::vector<int>{false_slots[1], false_slots[0]}
                              : std::vector<int>{0, 2};
        auto push_block = [&](int p, bool with_occ) {
            seq.push_back(L.tech_a[iu][p]);
            seq.push_back(L.tech_b[iu][p]);
            if (with_occ) seq.push_back(L.occ[iu][p]);
            seq.push_back(L.tech_d[iu][p]);
            seq.push_back(L.tech_e[iu][p]);
            seq.push_back(L.tech_f[iu][p]);
        };
        for (int p : false_order) push_block(p, false);
        for (int p : true_slots) push_block(p, true);
    }
    Ordering order = Ordering::from_sequence(std::move(seq), L.graph.vertex_count());
    RootedSpanningTree tree = RootedSpanningTree::from_parents(L.root, std::move(L.parent));
    if (!verify_ltree_order(L.graph, tree, order))
        throw std::logic_error("constructed ordering failed verification");
    return order;
}

std::vector<bool> assignment_from_order(const CnfFormula& formula, const Graph& graph,
                                        const RootedSpanningTree& tree, const Ordering& order) {
    require_valid(validate_cnf(formula), "invalid formula");
    if (!verify_ltree_order(graph, tree, order))
        throw ValidationError("ordering does not verify on the reduced instance");
    std::vector<bool> assignment(static_cast<std::size_t>(formula.variable_count));
    for (int j = 1; j <= formula.variable_count; ++j) {
        auto v0 = graph.vertices.find("x." + num(j) + "(0)");
        auto v1 = graph.vertices.find("x." + num(j) + "(1)");
        if (!v0 || !v1)
            throw ValidationError("graph lacks the literal vertices of variable " + num(j));
        assignment[static_cast<std::size_t>(j - 1)] =
            order.pos[static_cast<std::size_t>(*v0)] < order.pos[static_cast<std::size_t>(*v1)];
    }
    if (!satisfies(formula, assignment))
        throw std::logic_error("verified ordering produced a falsifying assignment");
    return assignment;
}

UnrootedLtreeReduction rooted_to_unrooted(const Graph& graph, const RootedSpanningTree& tree) {
    require_valid(validate_instance(graph, tree), "invalid instance");
    UnrootedLtreeReduction out;
    out.graph = graph;
    for (int v = 0; v < graph.vertex_count(); ++v)
        out.map.add("vertex", graph.vertices.name(v), graph.vertices.name(v));
    std::string an = out.graph.vertices.fresh("a");
    int a = out.graph.add_vertex(an);
    std::string bn = out.graph.vertices.fresh("b");
    int b = out.graph.add_vertex(bn);
    std::string cn = out.graph.vertices.fresh("c");
    int c = out.graph.add_vertex(cn);
    out.map.add("apex", an, graph.vertices.name(tree.root));
    out.map.add("gadget", bn);
    out.map.add("gadget", cn);
    out.graph.add_edge(a, b);
    out.graph.add_edge(a, c);
    out.graph.add_edge(b, c);
    out.graph.add_edge(a, tree.root);
    out.tree_edges = tree.tree_edges();
    out.tree_edges.emplace_back(a, tree.root);
    out.tree_edges.emplace_back(a, b);
    out.tree_edges.emplace_back(a, c);
    return out;
}

GimReduction ltree_to_gim(const Graph& graph, const RootedSpanningTree& tree, GimVariant variant) {
    require_valid(validate_instance(graph, tree), "invalid instance");
    if (variant == GimVariant::Height && tree.height_edges() < 2)
        throw ValidationError("height variant needs tree height >= 2");
    if (tree.children[static_cast<std::size_t>(tree.root)].empty())
        throw ValidationError("root has no child");
    int t = tree.children[static_cast<std::size_t>(tree.root)].front();
    GimReduction out;
    GimInstance& inst = out.instance;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        inst.elements.add(graph.vertices.name(v));
        out.map.add("vertex", graph.vertices.name(v), graph.vertices.name(v));
    }
    std::string sname = inst.elements.fresh("s");
    int s = inst.elements.add(sname);
    out.map.add("sentinel", sname);
    if (variant == GimVariant::Height)
        inst.triples.push_back({tree.root, t, s});
    else
        inst.triples.push_back({t, s, tree.root});
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (v != tree.root) inst.triples.push_back({s, tree.parent[static_cast<std::size_t>(v)], v});
    for (auto [u, v] : graph.edge_list()) {
        if (tree.has_tree_edge(u, v)) continue;
        if (v != tree.root) inst.triples.push_back({u, tree.parent[static_cast<std::size_t>(v)], v});
        if (u != tree.root) inst.triples.push_back({v, tree.parent[static_cast<std::size_t>(u)], u});
    }
    return out;
}

LtreeFromGimReduction gim_cstree_to_ltree(const GimInstance& inst) {
    require_valid(validate_gim(inst, false), "invalid instance");
    if (!inst.pairs.empty())
        throw ValidationError("instance has precedence pairs; fold them into triples first");
    InducedOrder ind = induced_order(inst);
    if (!ind.consistent) throw ValidationError("induced order is cyclic");
    if (!is_cs_tree(ind.order)) throw ValidationError("induced order is not a cs-tree");
    const int n = inst.elements.size();
    HasseDiagram hd = hasse(ind.order);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (auto [lo, hi] : hd.cover_edges) parent[static_cast<std::size_t>(hi)] = lo;
    int root = -1;
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<std::size_t>(v)] < 0) root = v;
    LtreeFromGimReduction out;
    for (int v = 0; v < n; ++v) out.graph.add_vertex(inst.elements.name(v));
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<std::size_t>(v)] >= 0) out.graph.add_edge(v, parent[static_cast<std::size_t>(v)]);
    for (const auto& tr : inst.triples) {
        int x = tr[0], y = tr[1], z = tr[2];
        // Hasse path from z up to y; y is an ancestor because y precedes z
        // in the induced tree order
        for (int cur = z; cur != y; cur = parent[static_cast<std::size_t>(cur)]) {
            assert(cur >= 0);
            if (cur == x)
                throw ValidationError("triple (" + inst.elements.name(x) + ", " + inst.elements.name(y) +
                                      ", " + inst.elements.name(z) +
                                      ") pins its first element onto its own constraint path; "
                                      "the instance is infeasible as stated");
            out.graph.add_edge(x, cur);
        }
    }
    out.tree = RootedSpanningTree::from_parents(root, std::move(parent));
    return out;
}

GimReduction gim_to_im(const GimInstance& inst) {
    require_valid(validate_gim(inst, false), "invalid instance");
    InducedOrder ind = induced_order(inst);
    if (!ind.consistent) throw ValidationError("induced order is cyclic");
    const int n = inst.elements.size();

    std::vector<std::vector<int>> led(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < inst.triples.size(); ++t)
        led[static_cast<std::size_t>(inst.triples[t][0])].push_back(static_cast<int>(t));

    GimReduction out;
    GimInstance& im = out.instance;
    auto put = [&im](const std::string& wanted) {
        std::string nm = im.elements.fresh(wanted);
        return std::make_pair(im.elements.add(nm), nm);
    };

    std::vector<int> ea(static_cast<std::size_t>(n)), ed(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> eb(static_cast<std::size_t>(n)), ec(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto iu = static_cast<std::size_t>(i);
        const std::string& base = inst.elements.name(i);
        auto [aid, aname] = put("a." + base);
        ea[iu] = aid;
        out.map.add("block-a", aname, base);
        eb[iu].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            auto [bid, bname] = put("b." + base + "." + inst.elements.name(j));
            eb[iu][static_cast<std::size_t>(j)] = bid;
            out.map.add("block-b", bname, base);
        }
        ec[iu].resize(led[iu].size());
        for (std::size_t l = 0; l < led[iu].size(); ++l) {
            auto [cid, cname] = put("c." + base + "." + num(static_cast<int>(l) + 1));
            ec[iu][l] = cid;
            out.map.add("block-c", cname, base);
        }
        auto [did, dname] = put("d." + base);
        ed[iu] = did;
        out.map.add("block-d", dname, base);
    }

    for (int i = 0; i < n; ++i) {
        auto iu = static_cast<std::size_t>(i);
        int prev = ea[iu];
        for (int j = 0; j < n; ++j) {
            im.pairs.emplace_back(prev, eb[iu][static_cast<std::size_t>(j)]);
            prev = eb[iu][static_cast<std::size_t>(j)];
        }
        for (int c : ec[iu]) {
            im.pairs.emplace_back(prev, c);
            prev = c;
        }
        im.pairs.emplace_back(prev, ed[iu]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && ind.order.less(i, j))
                im.pairs.emplace_back(ed[static_cast<std::size_t>(i)], ea[static_cast<std::size_t>(j)]);

    std::vector<std::array<int, 3>> trip;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                trip.push_back({eb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                ea[static_cast<std::size_t>(j)], ed[static_cast<std::size_t>(j)]});
    for (int i = 0; i < n; ++i)
        for (std::size_t l = 0; l < led[static_cast<std::size_t>(i)].size(); ++l) {
            const auto& g = inst.triples[static_cast<std::size_t>(led[static_cast<std::size_t>(i)][l])];
            trip.push_back({ec[static_cast<std::size_t>(i)][l], ea[static_cast<std::size_t>(g[1])],
                            ed[static_cast<std::size_t>(g[2])]});
        }

    HasseDiagram hd = hasse(ind.order);
    std::vector<std::vector<int>> covers_up(static_cast<std::size_t>(n)), covers_dn(static_cast<std::size_t>(n));
    for (auto [lo, hi] : hd.cover_edges) {
        covers_up[static_cast<std::size_t>(lo)].push_back(hi);
        covers_dn[static_cast<std::size_t>(hi)].push_back(lo);
    }

    // splitter chains in front of each a: d^parent - a_1 - ... - a_t - a
    std::vector<int> a_head(ea);
    for (int i = 0; i < n; ++i) {
        auto iu = static_cast<std::size_t>(i);
        std::vector<int> ts;
        for (std::size_t t = 0; t < trip.size(); ++t)
            if (trip[t][1] == ea[iu]) ts.push_back(static_cast<int>(t));
        if (ts.empty()) continue;
        const std::string& base = inst.elements.name(i);
        int prev = -1;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            auto [id, nm] = put("a." + base + ".s" + num(static_cast<int>(k) + 1));
            out.map.add("splitter-a", nm, base);
            if (k == 0) {
                a_head[iu] = id;
                for (int par : covers_dn[iu]) im.pairs.emplace_back(ed[static_cast<std::size_t>(par)], id);
            } else {
                im.pairs.emplace_back(prev, id);
            }
            trip[static_cast<std::size_t>(ts[k])][1] = id;
            prev = id;
        }
        im.pairs.emplace_back(prev, ea[iu]);
    }

    // splitter chains behind each d: d - d_1 - ... - d_t - head of each child
    for (int j = 0; j < n; ++j) {
        auto ju = static_cast<std::size_t>(j);
        std::vector<int> ts;
        for (std::size_t t = 0; t < trip.size(); ++t)
            if (trip[t][2] == ed[ju]) ts.push_back(static_cast<int>(t));
        if (ts.empty()) continue;
        const std::string& base = inst.elements.name(j);
        int prev = ed[ju];
        for (std::size_t k = 0; k < ts.size(); ++k) {
            auto [id, nm] = put("d." + base + ".s" + num(static_cast<int>(k) + 1));
            out.map.add("splitter-d", nm, base);
            im.pairs.emplace_back(prev, id);
            trip[static_cast<std::size_t>(ts[k])][2] = id;
            prev = id;
        }
        for (int child : covers_up[ju]) im.pairs.emplace_back(prev, a_head[static_cast<std::size_t>(child)]);
    }

    im.triples = std::move(trip);
    return out;
}

namespace {

// Vertices of each color in index order; classes are validated equal-sized.
std::vector<std::vector<int>> color_classes(const MulticolorGraph& g) {
    std::vector<std::vector<int>> by_color(static_cast<std::size_t>(g.color_count));
    for (int v = 0; v < g.vertices.size(); ++v)
        by_color[static_cast<std::size_t>(g.color[static_cast<std::size_t>(v)])].push_back(v);
    return by_color;
}

}  // namespace

GimReduction mcp_to_gim(const MulticolorGraph& g, bool lower_pairs) {
    require_valid(validate_mcp(g), "invalid multicolor graph");
    const int k = g.color_count;
    const int q = g.class_size();
    auto classes = color_classes(g);

    GimReduction out;
    GimInstance& inst = out.instance;
    std::vector<int> s(static_cast<std::size_t>(k) + 2, -1);
    for (int i = 1; i <= k + 1; ++i) {
        std::string nm = "s." + num(i);
        s[static_cast<std::size_t>(i)] = inst.elements.add(nm);
        out.map.add("selector", nm);
    }
    std::vector<std::vector<int>> c(static_cast<std::size_t>(k) + 1,
                                    std::vector<int>(static_cast<std::size_t>(k) + 1, -1));
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
            std::string nm = "c." + num(i) + "," + num(j);
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inst.elements.add(nm);
            out.map.add("checker", nm);
        }
    auto u = std::vector<std::vector<std::vector<int>>>(
        static_cast<std::size_t>(k) + 1,
        std::vector<std::vector<int>>(static_cast<std::size_t>(q) + 1,
                                      std::vector<int>(static_cast<std::size_t>(k) + 1, -1)));
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= q; ++p)
            for (int j = 0; j <= k; ++j) {
                std::string nm = "u." + num(i) + "." + num(p) + "." + num(j);
                u[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] =
                    inst.elements.add(nm);
                out.map.add("slot", nm,
                            g.vertices.name(classes[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p - 1)]));
            }
    auto U = [&u](int i, int p, int j) {
        return u[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    };
    auto Cc = [&c](int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= q; ++p)
            for (int j = 0; j <= k; ++j) inst.pairs.emplace_back(s[static_cast<std::size_t>(i)], U(i, p, j));
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= q; ++p)
            for (int j = 0; j <= k; ++j)
                for (int r = p; r <= q; ++r)
                    for (int l = (r == p ? j + 1 : 0); l <= k; ++l)
                        inst.pairs.emplace_back(U(i, p, j), U(i, r, l));
    for (int i = 1; i <= k; ++i)
        inst.pairs.emplace_back(U(i, 1, 0), s[static_cast<std::size_t>(i) + 1]);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int l = i; l <= k; ++l)
                for (int m = (l == i ? j + 1 : l); m <= k; ++m)
                    if (l > i || m > j) inst.pairs.emplace_back(Cc(i, j), Cc(l, m));
    for (int i = 1; i < k; ++i) inst.pairs.emplace_back(Cc(i, k), Cc(i + 1, i + 1));
    inst.pairs.emplace_back(s[static_cast<std::size_t>(k) + 1], Cc(1, 1));

    // selection phase
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p < q; ++p)
            for (int j = 1; j <= k; ++j)
                inst.triples.push_back({s[static_cast<std::size_t>(i) + 1], U(i, p, j), U(i, p + 1, 0)});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            inst.triples.push_back({U(i, q, j), s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]});
    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= q; ++p)
            for (int j = 0; j <= k; ++j)
                inst.triples.push_back({U(i, p, j), s[static_cast<std::size_t>(i) + 1], Cc(1, 1)});
    // verification phase
    for (int i = 1; i < k; ++i)
        for (int x = 0; x < inst.elements.size(); ++x)
            if (x != Cc(i, k) && x != Cc(i + 1, i + 1))
                inst.triples.push_back({x, Cc(i, k), Cc(i + 1, i + 1)});
    for (int l = 1; l <= k; ++l)
        for (int m = l; m < k; ++m)
            for (int i = 1; i <= k; ++i)
                for (int p = 1; p <= q; ++p)
                    for (int j = 0; j <= k; ++j) {
                        bool excluded = (i == m + 1 && j == l) || (i == l && j == m);
                        if (!excluded) inst.triples.push_back({U(i, p, j), Cc(l, m), Cc(l, m + 1)});
                    }
    for (int l = 1; l <= k; ++l)
        for (int m = l; m < k; ++m)
            for (int p = 1; p <= q; ++p) {
                inst.triples.push_back({Cc(l, m + 1), U(l, p, m - 1), U(l, p, m)});
                inst.triples.push_back({Cc(l, m + 1), U(m + 1, p, l - 1), U(m + 1, p, l)});
            }
    for (int l = 1; l <= k; ++l)
        for (int m = l; m < k; ++m)
            for (int p = 1; p <= q; ++p)
                for (int r = 1; r <= q; ++r) {
                    int vl = classes[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(p - 1)];
                    int vm = classes[static_cast<std::size_t>(m)][static_cast<std::size_t>(r - 1)];
                    if (g.has_edge(vl, vm)) continue;
                    inst.triples.push_back({U(m + 1, r, l), U(l, p, m), U(l, p, m + 1)});
                    inst.triples.push_back({U(l, p, m), U(m + 1, r, l), U(m + 1, r, l + 1)});
                }

    assert(inst.elements.size() == (k + 1) + k * (k + 1) / 2 + k * q * (k + 1));
    if (lower_pairs) {
        int before = out.instance.elements.size();
        out.instance = lower_pairs_to_triples(out.instance);
        if (out.instance.elements.size() > before)
            out.map.add("pair-anchor", out.instance.elements.name(before));
    }
    return out;
}

std::vector<int> clique_from_order(const MulticolorGraph& g, const GimInstance& inst,
                                   const Ordering& order) {
    require_valid(validate_mcp(g), "invalid multicolor graph");
    if (order.length() != inst.elements.size() || !verify_ordering(inst, order))
        throw ValidationError("ordering does not verify on the reduced instance");
    const int k = g.color_count;
    const int q = g.class_size();
    auto classes = color_classes(g);
    auto elem = [&inst](const std::string& nm) {
        auto id = inst.elements.find(nm);
        if (!id) throw ValidationError("instance lacks element " + nm + "; not a clique reduction");
        return *id;
    };
    int c11_pos = order.pos[static_cast<std::size_t>(elem("c.1,1"))];
    std::vector<int> clique;
    for (int i = 1; i <= k; ++i) {
        int best_p = -1, best_pos = -1;
        for (int p = 1; p <= q; ++p) {
            int pos = order.pos[static_cast<std::size_t>(elem("u." + num(i) + "." + num(p) + ".0"))];
            if (pos < c11_pos && pos > best_pos) {
                best_pos = pos;
                best_p = p;
            }
        }
        if (best_p < 0)
            throw ValidationError("no color-" + num(i) + " slot element precedes c.1,1");
        clique.push_back(classes[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(best_p - 1)]);
    }
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (!g.has_edge(clique[a], clique[b]))
                throw std::logic_error("verified ordering produced a non-clique");
    return clique;
}

}  // namespace ltw
