#include "ltw/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "ltw/errors.hpp"
#include "ltw/generators.hpp"
#include "ltw/graph.hpp"
#include "ltw/intermezzo.hpp"
#include "ltw/io.hpp"
#include "ltw/order.hpp"
#include "ltw/recognition.hpp"
#include "ltw/reductions.hpp"

namespace ltw {
namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct SolveFlags {
    std::string kind;
    std::string path;
    std::string engine = "auto";
    long long budget = kDefaultSearchBudget;
    long long state_cap = kDefaultStateCap;
    bool stats = false;
};

struct ReduceFlags {
    std::string kind;
    std::string in_path;
    std::string out_path;
    std::string variant = "height";
    bool lower_pairs = false;
};

struct VerifyFlags {
    std::string kind;
    std::string instance_path;
    std::string order_path;
};

struct GenFlags {
    std::string kind;
    std::string out_path;
    int t = 2;
    int n = -1;
    int m = -1;
    int k = -1;
    int q = 2;
    int triples = 5;
    double p = 0.5;
    std::uint64_t seed = 1;
};

long long saturating_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<long long>::max() / b) return std::numeric_limits<long long>::max();
    return a * b;
}

std::string extension_of(const std::string& path) {
    auto dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot);
}

// First broken constraint of an intermezzo ordering, if any. The order is
// already known to be a permutation of the element set.
std::optional<std::string> explain_gim_violation(const GimInstance& inst, const Ordering& order) {
    auto at = [&order](int e) { return order.pos[static_cast<std::size_t>(e)]; };
    for (auto [a, b] : inst.pairs)
        if (at(a) >= at(b))
            return "pair (" + inst.elements.name(a) + " " + inst.elements.name(b) + ") violated";
    for (const auto& t : inst.triples) {
        bool first = at(t[0]) < at(t[1]) && at(t[1]) < at(t[2]);
        bool last = at(t[1]) < at(t[2]) && at(t[2]) < at(t[0]);
        if (!first && !last)
            return "triple (" + inst.elements.name(t[0]) + " " + inst.elements.name(t[1]) + " " +
                   inst.elements.name(t[2]) + ") violated";
    }
    return std::nullopt;
}

int emit_recognition(const RecognitionResult& res, const Graph& graph, std::ostream& out) {
    switch (res.status) {
        case RecStatus::Feasible:
            out << "FEASIBLE\n";
            write_order(out, graph.vertices, *res.witness);
            return kExitFeasible;
        case RecStatus::Infeasible:
            out << "INFEASIBLE\n";
            return kExitInfeasible;
        case RecStatus::BudgetExhausted:
            out << "RESOURCE-EXCEEDED\n";
            return kExitResource;
    }
    return kExitData;
}

int cmd_solve_ltree(const SolveFlags& flags, std::ostream& out) {
    LtiFile lti = read_lti_file(flags.path);
    if (lti.graph.vertex_count() == 0) throw ValidationError("empty instance");
    std::string engine_used = "backtracking";
    RecognitionResult res;
    if (lti.rooted()) {
        RootedSpanningTree tree = lti.resolve_tree();
        auto defects = validate_instance(lti.graph, tree);
        if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
        bool solved = false;
        if (flags.engine == "auto") {
            if (auto order = decide_hookfree(lti.graph, tree)) {
                res.status = RecStatus::Feasible;
                res.witness = std::move(order);
                engine_used = "hookfree";
                solved = true;
            }
        }
        if (!solved) res = recognize_rooted(lti.graph, tree, flags.budget);
    } else {
        UnrootedResult ur = recognize_unrooted(lti.graph, lti.tree_edges, flags.budget);
        res = std::move(ur.result);
        engine_used = "unrooted-backtracking";
    }
    int code = emit_recognition(res, lti.graph, out);
    if (flags.stats) {
        out << "stat engine=" << engine_used << "\n";
        out << "stat nodes=" << res.nodes_explored << "\n";
    }
    return code;
}

int cmd_solve_intermezzo(const SolveFlags& flags, std::ostream& out) {
    GimInstance inst = read_imz_file(flags.path);
    auto defects = validate_gim(inst, false);
    if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
    SolveResult res;
    std::string engine_used;
    if (flags.engine == "backtrack") {
        res = solve_backtracking(inst, flags.budget);
        engine_used = "backtracking";
    } else {
        res = solve_dp(inst, flags.state_cap);
        engine_used = "dp";
        if (flags.engine == "auto" && res.status == SolveStatus::ResourceExceeded) {
            res = solve_backtracking(inst, flags.budget);
            engine_used = "backtracking";
        }
    }
    int code = kExitData;
    switch (res.status) {
        case SolveStatus::Feasible:
            out << "FEASIBLE\n";
            write_order(out, inst.elements, *res.witness);
            code = kExitFeasible;
            break;
        case SolveStatus::Infeasible:
            out << "INFEASIBLE\n";
            code = kExitInfeasible;
            break;
        case SolveStatus::ResourceExceeded:
            out << "RESOURCE-EXCEEDED\n";
            code = kExitResource;
            break;
    }
    if (flags.stats) {
        out << "stat engine=" << engine_used << "\n";
        out << "stat nodes=" << res.stats.nodes << "\n";
        out << "stat dp_states=" << res.stats.dp_states << "\n";
        out << "stat dp_reachable=" << res.stats.dp_reachable << "\n";
        out << "stat dp_bound=" << res.stats.dp_bound << "\n";
        out << "stat width=" << res.stats.width << "\n";
    }
    return code;
}

int cmd_solve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
    if (flags.kind == "ltree") {
        if (flags.engine == "dp") {
            err << "engine 'dp' applies to intermezzo instances only\n";
            return kExitUsage;
        }
        return cmd_solve_ltree(flags, out);
    }
    return cmd_solve_intermezzo(flags, out);
}

void write_text_file(const std::string& path, const std::string& content) { spit_file(path, content); }

void emit_lti_summary(std::ostream& out, const std::string& path, const Graph& g) {
    out << "wrote " << path << " (" << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges)\n";
}

void emit_imz_summary(std::ostream& out, const std::string& path, const GimInstance& inst) {
    out << "wrote " << path << " (" << inst.elements.size() << " elements, " << inst.pairs.size()
        << " pairs, " << inst.triples.size() << " triples)\n";
}

void write_map_sidecar(std::ostream& out, const std::string& base, const WitnessMap& map) {
    std::ostringstream ss;
    write_map(ss, map);
    write_text_file(base + ".map", ss.str());
    out << "wrote " << base << ".map (" << map.roles.size() << " roles)\n";
}

int cmd_reduce(const ReduceFlags& flags, std::ostream& out) {
    if (flags.kind == "sat2ltree") {
        CnfFormula f = read_dimacs_file(flags.in_path);
        SatLtreeReduction red = sat_to_ltree(f);
        std::ostringstream ss;
        write_lti(ss, red.graph, red.tree.tree_edges(), red.tree.root);
        write_text_file(flags.out_path, ss.str());
        emit_lti_summary(out, flags.out_path, red.graph);
        write_map_sidecar(out, flags.out_path, red.map);
    } else if (flags.kind == "root2unroot") {
        LtiFile lti = read_lti_file(flags.in_path);
        if (!lti.rooted()) throw ValidationError("input instance declares no root");
        UnrootedLtreeReduction red = rooted_to_unrooted(lti.graph, lti.resolve_tree());
        std::ostringstream ss;
        write_lti(ss, red.graph, red.tree_edges, -1);
        write_text_file(flags.out_path, ss.str());
        emit_lti_summary(out, flags.out_path, red.graph);
        write_map_sidecar(out, flags.out_path, red.map);
    } else if (flags.kind == "ltree2gim") {
        LtiFile lti = read_lti_file(flags.in_path);
        if (!lti.rooted()) throw ValidationError("input instance declares no root");
        GimVariant variant = flags.variant == "width" ? GimVariant::Width : GimVariant::Height;
        GimReduction red = ltree_to_gim(lti.graph, lti.resolve_tree(), variant);
        std::ostringstream ss;
        write_imz(ss, red.instance);
        write_text_file(flags.out_path, ss.str());
        emit_imz_summary(out, flags.out_path, red.instance);
        write_map_sidecar(out, flags.out_path, red.map);
    } else if (flags.kind == "gim2ltree") {
        GimInstance inst = read_imz_file(flags.in_path);
        auto defects = validate_gim(inst, false);
        if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
        LtreeFromGimReduction red = gim_cstree_to_ltree(inst);
        std::ostringstream ss;
        write_lti(ss, red.graph, red.tree.tree_edges(), red.tree.root);
        write_text_file(flags.out_path, ss.str());
        emit_lti_summary(out, flags.out_path, red.graph);
        WitnessMap identity;
        for (int v = 0; v < red.graph.vertex_count(); ++v)
            identity.add("vertex", red.graph.vertices.name(v), red.graph.vertices.name(v));
        write_map_sidecar(out, flags.out_path, identity);
    } else if (flags.kind == "gim2im") {
        GimInstance inst = read_imz_file(flags.in_path);
        auto defects = validate_gim(inst, false);
        if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
        GimReduction red = gim_to_im(inst);
        std::ostringstream ss;
        write_imz(ss, red.instance);
        write_text_file(flags.out_path, ss.str());
        emit_imz_summary(out, flags.out_path, red.instance);
        write_map_sidecar(out, flags.out_path, red.map);
    } else {  // mcp2gim
        MulticolorGraph g = read_mcg_file(flags.in_path);
        GimReduction red = mcp_to_gim(g, flags.lower_pairs);
        std::ostringstream ss;
        write_imz(ss, red.instance);
        write_text_file(flags.out_path, ss.str());
        emit_imz_summary(out, flags.out_path, red.instance);
        write_map_sidecar(out, flags.out_path, red.map);
    }
    return kExitFeasible;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
    std::optional<std::string> why;
    if (flags.kind == "ltree") {
        LtiFile lti = read_lti_file(flags.instance_path);
        if (lti.graph.vertex_count() == 0) throw ValidationError("empty instance");
        auto in = std::istringstream(slurp_file(flags.order_path));
        Ordering order = read_order(in, lti.graph.vertices);
        int root = lti.rooted() ? lti.root : order.seq.front();
        RootedSpanningTree tree = lti.resolve_tree(root);
        why = explain_ltree_violation(lti.graph, tree, order);
    } else {
        GimInstance inst = read_imz_file(flags.instance_path);
        auto defects = validate_gim(inst, false);
        if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
        auto in = std::istringstream(slurp_file(flags.order_path));
        Ordering order = read_order(in, inst.elements);
        why = explain_gim_violation(inst, order);
    }
    if (why) {
        out << "INVALID " << *why << "\n";
        return kExitInfeasible;
    }
    out << "VALID\n";
    return kExitFeasible;
}

int cmd_analyze_lti(const std::string& path, std::ostream& out) {
    LtiFile lti = read_lti_file(path);
    out << "vertices: " << lti.graph.vertex_count() << "\n";
    out << "edges: " << lti.graph.edge_count() << "\n";
    if (!lti.rooted()) {
        out << "rooted: false\n";
        return kExitFeasible;
    }
    out << "rooted: true\n";
    RootedSpanningTree tree = lti.resolve_tree();
    auto defects = validate_instance(lti.graph, tree);
    if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
    out << "tree-height: " << tree.height_edges() << "\n";
    out << "hooks: " << find_hooks(lti.graph, tree).size() << "\n";
    out << "ubends: " << find_ubends(lti.graph, tree).size() << "\n";
    OrderBuild necessity = necessity_order(lti.graph, tree);
    out << "necessity: " << (necessity.ok ? "consistent" : "cyclic") << "\n";
    return kExitFeasible;
}

int cmd_analyze_imz(const std::string& path, std::ostream& out) {
    GimInstance inst = read_imz_file(path);
    auto defects = validate_gim(inst, false);
    if (!defects.empty()) throw ValidationError("invalid instance: " + defects.front());
    out << "elements: " << inst.elements.size() << "\n";
    out << "pairs: " << inst.pairs.size() << "\n";
    out << "triples: " << inst.triples.size() << "\n";
    InducedOrder ind = induced_order(inst);
    out << "consistent: " << (ind.consistent ? "true" : "false") << "\n";
    if (!ind.consistent) return kExitFeasible;
    out << "height: " << height(ind.order) << "\n";
    ChainPartition cp = chain_partition(ind.order);
    out << "width: " << cp.chains.size() << "\n";
    out << "cs-tree: " << (is_cs_tree(ind.order) ? "true" : "false") << "\n";
    long long states = 1;
    for (const auto& chain : cp.chains) {
        out << "chain:";
        for (int e : chain) out << " " << inst.elements.name(e);
        out << "\n";
        states = saturating_mul(states, static_cast<long long>(chain.size()) + 1);
    }
    long long bound = 1;
    for (std::size_t i = 0; i < cp.chains.size(); ++i)
        bound = saturating_mul(bound, static_cast<long long>(inst.elements.size()) + 1);
    out << "dp-states: " << states << "\n";
    out << "dp-bound: " << bound << "\n";
    return kExitFeasible;
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
    std::string ext = extension_of(path);
    if (ext == ".lti") return cmd_analyze_lti(path, out);
    if (ext == ".imz") return cmd_analyze_imz(path, out);
    err << "cannot infer instance kind from '" << path << "' (expected .lti or .imz)\n";
    return kExitUsage;
}

int cmd_gen(const GenFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream ss;
        if (flags.kind == "fig4") {
            LtreeInstance inst = gen_fig4(flags.t);
            write_lti(ss, inst.graph, inst.tree.tree_edges(), inst.tree.root);
            write_text_file(flags.out_path, ss.str());
            emit_lti_summary(out, flags.out_path, inst.graph);
        } else if (flags.kind == "cnf") {
            CnfFormula f = gen_random_cnf(flags.n < 0 ? 3 : flags.n, flags.m < 0 ? 1 : flags.m, flags.seed);
            write_dimacs(ss, f);
            write_text_file(flags.out_path, ss.str());
            out << "wrote " << flags.out_path << " (" << f.variable_count << " variables, "
                << f.clauses.size() << " clauses)\n";
        } else if (flags.kind == "mcp") {
            MulticolorGraph g = gen_random_mcp(flags.k < 0 ? 2 : flags.k, flags.q, flags.p, flags.seed);
            write_mcg(ss, g);
            write_text_file(flags.out_path, ss.str());
            out << "wrote " << flags.out_path << " (" << g.vertices.size() << " vertices, "
                << g.edges.size() << " edges)\n";
        } else if (flags.kind == "gim") {
            GimInstance inst = gen_random_gim(flags.k < 0 ? 2 : flags.k, flags.n < 0 ? 10 : flags.n,
                                              flags.triples, flags.seed);
            write_imz(ss, inst);
            write_text_file(flags.out_path, ss.str());
            emit_imz_summary(out, flags.out_path, inst);
        } else {  // ltree
            LtreeInstance inst = gen_random_ltree(flags.n < 0 ? 5 : flags.n, flags.p, flags.seed);
            write_lti(ss, inst.graph, inst.tree.tree_edges(), inst.tree.root);
            write_text_file(flags.out_path, ss.str());
            emit_lti_summary(out, flags.out_path, inst.graph);
        }
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitFeasible;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Search-tree recognition and constrained-ordering workbench"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Decide an instance and print a witness order");
    solve->add_option("kind", solve_flags.kind, "Instance kind")
        ->required()
        ->check(CLI::IsMember({"ltree", "intermezzo"}));
    solve->add_option("file", solve_flags.path, "Instance file")->required();
    solve->add_option("--engine", solve_flags.engine, "Solving engine")
        ->check(CLI::IsMember({"auto", "dp", "backtrack"}));
    solve->add_option("--budget", solve_flags.budget, "Backtracking node budget");
    solve->add_option("--state-cap", solve_flags.state_cap, "Dynamic-programming state cap");
    solve->add_flag("--stats", solve_flags.stats, "Emit machine-readable stat lines");

    ReduceFlags reduce_flags;
    auto* reduce = app.add_subcommand("reduce", "Translate an instance into another problem");
    reduce->add_option("kind", reduce_flags.kind, "Reduction")
        ->required()
        ->check(CLI::IsMember({"sat2ltree", "ltree2gim", "gim2ltree", "gim2im", "mcp2gim", "root2unroot"}));
    reduce->add_option("in", reduce_flags.in_path, "Input file")->required();
    reduce->add_option("out", reduce_flags.out_path, "Output file")->required();
    reduce->add_option("--variant", reduce_flags.variant, "Sentinel placement for ltree2gim")
        ->check(CLI::IsMember({"height", "width"}));
    reduce->add_flag("--lower-pairs", reduce_flags.lower_pairs,
                     "Fold precedence pairs into triples (mcp2gim)");

    VerifyFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "Check an order against an instance");
    verify->add_option("kind", verify_flags.kind, "Instance kind")
        ->required()
        ->check(CLI::IsMember({"ltree", "intermezzo"}));
    verify->add_option("instance", verify_flags.instance_path, "Instance file")->required();
    verify->add_option("order", verify_flags.order_path, "Order file, whitespace-separated names")
        ->required();

    std::string analyze_path;
    auto* analyze = app.add_subcommand("analyze", "Print structural measures of an instance");
    analyze->add_option("file", analyze_path, "Instance file (.lti or .imz)")->required();

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "Write a generated instance file");
    gen->add_option("kind", gen_flags.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"fig4", "cnf", "mcp", "gim", "ltree"}));
    gen->add_option("out", gen_flags.out_path, "Output file")->required();
    gen->add_option("--t", gen_flags.t, "Branch count (fig4)");
    gen->add_option("--n", gen_flags.n, "Variables (cnf) / elements (gim) / vertices (ltree)");
    gen->add_option("--m", gen_flags.m, "Clause count (cnf)");
    gen->add_option("--k", gen_flags.k, "Color count (mcp) / chain count (gim)");
    gen->add_option("--q", gen_flags.q, "Class size (mcp)");
    gen->add_option("--triples", gen_flags.triples, "Triple count (gim)");
    gen->add_option("--p", gen_flags.p, "Edge probability (mcp, ltree)");
    gen->add_option("--seed", gen_flags.seed, "Generator seed");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitFeasible;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_flags, out, err);
        if (reduce->parsed()) return cmd_reduce(reduce_flags, out);
        if (verify->parsed()) return cmd_verify(verify_flags, out);
        if (analyze->parsed()) return cmd_analyze(analyze_path, out, err);
        return cmd_gen(gen_flags, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitData;
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace ltw
