#include <doctest.h>

#include <array>
#include <filesystem>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ltw/cli.hpp"
#include "ltw/errors.hpp"
#include "ltw/generators.hpp"
#include "ltw/graph.hpp"
#include "ltw/intermezzo.hpp"
#include "ltw/io.hpp"
#include "ltw/names.hpp"
#include "ltw/reductions.hpp"

namespace {

// Scratch directory under the system temp root, wiped on destruction.
struct TempDir {
    std::filesystem::path dir;

    TempDir() {
        static int counter = 0;
        dir = std::filesystem::temp_directory_path() / ("ltw-io-test-" + std::to_string(++counter));
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }

    // Returns the path; writes the file only when content is given.
    std::string file(const std::string& name, const std::string& content = "") const {
        std::string path = (dir / name).string();
        if (!content.empty()) ltw::spit_file(path, content);
        return path;
    }
};

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun run;
    run.code = ltw::run_cli(std::move(args), out, err);
    run.out = out.str();
    run.err = err.str();
    return run;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string second_line(const std::string& text) {
    auto start = text.find('\n') + 1;
    return text.substr(start, text.find('\n', start) - start);
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("lti files survive a write and read cycle") {
    ltw::LtreeInstance inst = ltw::gen_fig4(3);
    std::ostringstream ss;
    ltw::write_lti(ss, inst.graph, inst.tree.tree_edges(), inst.tree.root);
    std::istringstream in(ss.str());
    ltw::LtiFile back = ltw::read_lti(in);
    CHECK(back.graph == inst.graph);
    CHECK(back.rooted());
    CHECK(back.root == inst.tree.root);
    CHECK(back.resolve_tree().parent == inst.tree.parent);

    SUBCASE("omitting the root line leaves the rooting free") {
        std::ostringstream free_ss;
        ltw::write_lti(free_ss, inst.graph, inst.tree.tree_edges(), -1);
        std::istringstream free_in(free_ss.str());
        ltw::LtiFile unrooted = ltw::read_lti(free_in);
        CHECK_FALSE(unrooted.rooted());
        CHECK_THROWS_WITH_AS(unrooted.resolve_tree(), "instance declares no root",
                             ltw::ValidationError);
        CHECK(unrooted.resolve_tree(0).root == 0);
    }
    SUBCASE("comments and blank lines are ignored") {
        std::istringstream text("# a triangle\n\nroot a # rooted here\ntree a b\ntree b c\nedge a c\n");
        ltw::LtiFile tri = ltw::read_lti(text);
        CHECK(tri.graph.vertex_count() == 3);
        CHECK(tri.graph.edge_count() == 3);
        CHECK(tri.root == 0);
        CHECK(tri.tree_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
}

TEST_CASE("lti parse errors name the offending line") {
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return ltw::read_lti(in);
    };
    CHECK_THROWS_WITH_AS(read("node a b\n"), "line 1: unknown directive 'node'", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("edge a a\n"), "line 1: loop edge at 'a'", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("root a\nroot b\n"), "line 2: repeated root line", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("tree a\n"), "line 1: malformed 'tree' line", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("edge a b c\n"), "line 1: malformed 'edge' line", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("root\n"), "line 1: malformed 'root' line", ltw::ParseError);
}

TEST_CASE("imz files round-trip byte for byte") {
    ltw::GimInstance inst = ltw::gen_random_gim(2, 6, 4, 11);
    std::ostringstream ss;
    ltw::write_imz(ss, inst);
    std::istringstream in(ss.str());
    ltw::GimInstance back = ltw::read_imz(in);
    CHECK(back.elements.all() == inst.elements.all());
    CHECK(back.pairs == inst.pairs);
    CHECK(back.triples == inst.triples);
    std::ostringstream again;
    ltw::write_imz(again, back);
    CHECK(again.str() == ss.str());

    SUBCASE("pair and triple lines declare elements on the fly") {
        std::istringstream text("pair a b\ntriple c d e\n");
        ltw::GimInstance lazy = ltw::read_imz(text);
        CHECK(lazy.elements.size() == 5);
        CHECK(lazy.pairs == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(lazy.triples == std::vector<std::array<int, 3>>{{2, 3, 4}});
    }
    SUBCASE("parse errors") {
        auto read = [](const std::string& text) {
            std::istringstream tin(text);
            return ltw::read_imz(tin);
        };
        CHECK_THROWS_WITH_AS(read("triple a b a\n"), "line 1: triple with repeated element",
                             ltw::ParseError);
        CHECK_THROWS_WITH_AS(read("pair a\n"), "line 1: malformed 'pair' line", ltw::ParseError);
        CHECK_THROWS_WITH_AS(read("order a b\n"), "line 1: unknown directive 'order'",
                             ltw::ParseError);
    }
}

TEST_CASE("mcg files round-trip and reject malformed input") {
    ltw::MulticolorGraph g = ltw::gen_random_mcp(3, 2, 0.6, 5);
    std::ostringstream ss;
    ltw::write_mcg(ss, g);
    std::istringstream in(ss.str());
    CHECK(ltw::read_mcg(in) == g);

    auto read = [](const std::string& text) {
        std::istringstream tin(text);
        return ltw::read_mcg(tin);
    };
    CHECK_THROWS_WITH_AS(read("vertex a 0\n"), "missing colors line", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("colors 1\ncolors 2\n"), "line 2: repeated colors line",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("colors 1\nvertex a 0\nvertex a 0\n"), "line 3: repeated vertex 'a'",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("colors 1\nvertex a 0\nedge a b\n"),
                         "line 3: edge references an undeclared vertex", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("colors 1\nvertex a 0\nedge a a\n"), "line 3: loop edge at 'a'",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("colors x\n"), "line 1: expected an integer, got 'x'",
                         ltw::ParseError);

    SUBCASE("duplicate edges collapse") {
        std::istringstream text("colors 2\nvertex a 0\nvertex b 1\nedge a b\nedge b a\n");
        CHECK(ltw::read_mcg(text).edges.size() == 1);
    }
}

TEST_CASE("dimacs files round-trip and validate clauses") {
    ltw::CnfFormula f = ltw::gen_random_cnf(4, 5, 3);
    std::ostringstream ss;
    ltw::write_dimacs(ss, f);
    std::istringstream in(ss.str());
    CHECK(ltw::read_dimacs(in) == f);

    auto read = [](const std::string& text) {
        std::istringstream tin(text);
        return ltw::read_dimacs(tin);
    };
    SUBCASE("comments and the percent trailer are skipped") {
        std::istringstream text("c a comment\np cnf 3 1\n1 -2 3 0\n%\n0\n");
        ltw::CnfFormula one = ltw::read_dimacs(text);
        CHECK(one.variable_count == 3);
        CHECK(one.clauses == std::vector<std::array<int, 3>>{{1, -2, 3}});
    }
    SUBCASE("clauses may span lines") {
        std::istringstream text("p cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n");
        CHECK(ltw::read_dimacs(text).clauses.size() == 2);
    }
    CHECK_THROWS_WITH_AS(read("1 2 3 0\n"), "line 1: clause before header", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 4 1\n1 2 3 4 0\n"),
                         "line 2: clause with 4 literals; exactly three required", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 2 1\n1 2 3 0\n"), "line 2: literal 3 out of range",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 3 2\n1 2 3 0\n"), "header declares 2 clauses, found 1",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 3 1\n1 2 3\n"), "unterminated final clause", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("c nothing\n"), "missing header", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 3 1\np cnf 3 1\n"), "line 2: repeated header", ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p dnf 3 1\n"),
                         "line 1: malformed header, expected 'p cnf <vars> <clauses>'",
                         ltw::ParseError);
    CHECK_THROWS_WITH_AS(read("p cnf 3 1\n1 1 2 0\n"),
                         "invalid formula: clause 1: repeated variable", ltw::ParseError);
}

TEST_CASE("witness maps round-trip with optional sources") {
    ltw::WitnessMap map;
    map.add("vertex", "a", "x");
    map.add("gadget", "b");
    std::ostringstream ss;
    ltw::write_map(ss, map);
    CHECK(ss.str() == "role vertex a x\nrole gadget b\n");
    std::istringstream in(ss.str());
    CHECK(ltw::read_map(in) == map);

    std::istringstream bad("link a b\n");
    CHECK_THROWS_WITH_AS(ltw::read_map(bad), "line 1: malformed role line", ltw::ParseError);
    std::istringstream short_line("role a\n");
    CHECK_THROWS_WITH_AS(ltw::read_map(short_line), "line 1: malformed role line", ltw::ParseError);
}

TEST_CASE("orders resolve names and must form permutations") {
    ltw::NameTable names;
    names.add("a");
    names.add("b");
    names.add("c");
    std::istringstream in("b c a\n");
    ltw::Ordering order = ltw::read_order(in, names);
    CHECK(order.seq == std::vector<int>{1, 2, 0});
    std::ostringstream ss;
    ltw::write_order(ss, names, order);
    CHECK(ss.str() == "b c a\n");

    std::istringstream unknown("b d a\n");
    CHECK_THROWS_WITH_AS(ltw::read_order(unknown, names), "unknown element 'd' in order",
                         ltw::ParseError);
    std::istringstream repeated("b b a\n");
    CHECK_THROWS_WITH_AS(ltw::read_order(repeated, names), "element 'b' repeated in order",
                         ltw::ValidationError);
    std::istringstream partial("b a\n");
    CHECK_THROWS_WITH_AS(ltw::read_order(partial, names), "order covers 2 of 3 elements",
                         ltw::ValidationError);
}

TEST_CASE("file helpers report missing paths") {
    CHECK_THROWS_WITH_AS(ltw::read_lti_file("/nonexistent/x.lti"),
                         "cannot open '/nonexistent/x.lti'", ltw::ParseError);
    CHECK_THROWS_WITH_AS(ltw::slurp_file("/nonexistent/x"), "cannot open '/nonexistent/x'",
                         ltw::ParseError);
    TempDir td;
    std::string path = td.file("note.txt");
    ltw::spit_file(path, "payload");
    CHECK(ltw::slurp_file(path) == "payload");
}

TEST_CASE("the cli generates, solves, and verifies tree instances") {
    TempDir td;
    std::string fig = td.file("fig.lti");
    CliRun gen = cli({"gen", "fig4", fig, "--t", "2"});
    CHECK(gen.code == 0);
    CHECK(gen.out == "wrote " + fig + " (5 vertices, 6 edges)\n");

    CliRun solve = cli({"solve", "ltree", fig, "--stats"});
    CHECK(solve.code == 1);
    CHECK(first_line(solve.out) == "INFEASIBLE");
    CHECK(has_line(solve.out, "stat engine=backtracking"));

    std::string tri = td.file("tri.lti", "root a\ntree a b\ntree b c\nedge a c\n");
    CliRun hookfree = cli({"solve", "ltree", tri, "--stats"});
    CHECK(hookfree.code == 0);
    CHECK(hookfree.out == "FEASIBLE\na b c\nstat engine=hookfree\nstat nodes=0\n");

    CliRun forced = cli({"solve", "ltree", tri, "--engine", "backtrack", "--stats"});
    CHECK(forced.code == 0);
    CHECK(has_line(forced.out, "stat engine=backtracking"));

    std::string good = td.file("good.ord", "a b c\n");
    CHECK(cli({"verify", "ltree", tri, good}).code == 0);
    CHECK(cli({"verify", "ltree", tri, good}).out == "VALID\n");
    std::string bad = td.file("bad.ord", "a c b\n");
    CliRun invalid = cli({"verify", "ltree", tri, bad});
    CHECK(invalid.code == 1);
    CHECK(invalid.out == "INVALID parent mismatch at b: expected a, got c\n");
    std::string shifted = td.file("shifted.ord", "b c a\n");
    CliRun wrong_start = cli({"verify", "ltree", tri, shifted});
    CHECK(wrong_start.code == 1);
    CHECK(wrong_start.out == "INVALID wrong start vertex: b instead of a\n");
}

TEST_CASE("the cli frees the root when the instance declares none") {
    TempDir td;
    std::string tri = td.file("free.lti", "tree a b\ntree b c\nedge a c\n");
    CliRun solve = cli({"solve", "ltree", tri, "--stats"});
    CHECK(solve.code == 0);
    CHECK(first_line(solve.out) == "FEASIBLE");
    CHECK(has_line(solve.out, "stat engine=unrooted-backtracking"));

    // verify roots the tree at the first vertex of the submitted order
    std::string ok = td.file("ok.ord", "a b c\n");
    CHECK(cli({"verify", "ltree", tri, ok}).out == "VALID\n");
    std::string bad = td.file("bad.ord", "b a c\n");
    CliRun ver = cli({"verify", "ltree", tri, bad});
    CHECK(ver.code == 1);
    CHECK(ver.out == "INVALID parent mismatch at c: expected b, got a\n");
}

TEST_CASE("the cli solves intermezzo instances with both engines") {
    TempDir td;
    std::string inst = td.file("pairs.imz", "elem a\nelem b\nelem c\npair a b\n");
    CliRun dp = cli({"solve", "intermezzo", inst, "--stats"});
    CHECK(dp.code == 0);
    CHECK(first_line(dp.out) == "FEASIBLE");
    CHECK(has_line(dp.out, "stat engine=dp"));
    CHECK(has_line(dp.out, "stat width=2"));
    CHECK(has_line(dp.out, "stat dp_states=6"));

    std::string witness = td.file("w.ord", second_line(dp.out) + "\n");
    CHECK(cli({"verify", "intermezzo", inst, witness}).out == "VALID\n");
    std::string rev = td.file("rev.ord", "b a c\n");
    CliRun vbad = cli({"verify", "intermezzo", inst, rev});
    CHECK(vbad.code == 1);
    CHECK(vbad.out == "INVALID pair (a b) violated\n");

    std::string trip = td.file("trip.imz", "elem a\nelem b\nelem c\ntriple a b c\n");
    std::string mid = td.file("mid.ord", "a c b\n");
    CHECK(cli({"verify", "intermezzo", trip, mid}).out == "INVALID triple (a b c) violated\n");
    std::string last = td.file("last.ord", "b c a\n");
    CHECK(cli({"verify", "intermezzo", trip, last}).out == "VALID\n");

    CliRun bt = cli({"solve", "intermezzo", inst, "--engine", "backtrack", "--stats"});
    CHECK(bt.code == 0);
    CHECK(has_line(bt.out, "stat engine=backtracking"));

    CliRun capped = cli({"solve", "intermezzo", inst, "--engine", "dp", "--state-cap", "1"});
    CHECK(capped.code == 2);
    CHECK(capped.out == "RESOURCE-EXCEEDED\n");

    CliRun fallback = cli({"solve", "intermezzo", inst, "--state-cap", "1", "--stats"});
    CHECK(fallback.code == 0);
    CHECK(has_line(fallback.out, "stat engine=backtracking"));

    std::string cyc = td.file("cyc.imz", "elem a\nelem b\npair a b\npair b a\n");
    CHECK(cli({"solve", "intermezzo", cyc}).code == 1);
    CHECK(cli({"solve", "intermezzo", cyc}).out == "INFEASIBLE\n");

    CliRun misuse = cli({"solve", "ltree", cyc, "--engine", "dp"});
    CHECK(misuse.code == 64);
    CHECK(misuse.err == "engine 'dp' applies to intermezzo instances only\n");
}

TEST_CASE("the cli reduces between formalisms and writes witness maps") {
    TempDir td;
    std::string cnf = td.file("f.cnf", "p cnf 3 1\n1 2 3 0\n");
    std::string lt = td.file("f.lti");
    CliRun sat = cli({"reduce", "sat2ltree", cnf, lt});
    CHECK(sat.code == 0);
    ltw::LtiFile red = ltw::read_lti_file(lt);
    CHECK(red.graph.vertex_count() == 27);
    CHECK(sat.out == "wrote " + lt + " (27 vertices, " + std::to_string(red.graph.edge_count()) +
                         " edges)\nwrote " + lt + ".map (27 roles)\n");
    CHECK(cli({"solve", "ltree", lt}).code == 0);

    std::string fig = td.file("fig.lti");
    cli({"gen", "fig4", fig});
    std::string un = td.file("un.lti");
    CliRun unroot = cli({"reduce", "root2unroot", fig, un});
    CHECK(unroot.code == 0);
    ltw::LtiFile ufile = ltw::read_lti_file(un);
    CHECK_FALSE(ufile.rooted());
    CHECK(unroot.out == "wrote " + un + " (8 vertices, " +
                            std::to_string(ufile.graph.edge_count()) + " edges)\nwrote " + un +
                            ".map (8 roles)\n");
    CHECK(cli({"solve", "ltree", un}).code == 1);

    std::string gm = td.file("g.imz");
    CliRun togim = cli({"reduce", "ltree2gim", fig, gm, "--variant", "height"});
    CHECK(togim.code == 0);
    CHECK(togim.out == "wrote " + gm + " (6 elements, 0 pairs, 9 triples)\nwrote " + gm +
                           ".map (6 roles)\n");
    CHECK(cli({"solve", "intermezzo", gm}).code == 1);

    std::string back = td.file("back.lti");
    CliRun toltree = cli({"reduce", "gim2ltree", gm, back});
    CHECK(toltree.code == 0);
    ltw::LtiFile bfile = ltw::read_lti_file(back);
    CHECK(bfile.rooted());
    CHECK(bfile.graph.vertex_count() == 6);
    CHECK(has_line(toltree.out, "wrote " + back + ".map (6 roles)"));

    std::string im = td.file("plain.imz");
    CliRun toim = cli({"reduce", "gim2im", gm, im});
    CHECK(toim.code == 0);
    ltw::GimInstance plain = ltw::read_imz_file(im);
    CHECK(plain.elements.size() == 3 * 6 * 6 + 3 * 9);
    CHECK(ltw::validate_gim(plain, true).empty());
    std::istringstream min(ltw::slurp_file(im + ".map"));
    ltw::WitnessMap wm = ltw::read_map(min);
    CHECK(toim.out == "wrote " + im + " (" + std::to_string(plain.elements.size()) +
                          " elements, " + std::to_string(plain.pairs.size()) + " pairs, " +
                          std::to_string(plain.triples.size()) + " triples)\nwrote " + im +
                          ".map (" + std::to_string(wm.roles.size()) + " roles)\n");

    std::string mcg = td.file("m.mcg");
    CHECK(cli({"gen", "mcp", mcg, "--k", "2", "--q", "2", "--p", "1.0"}).out ==
          "wrote " + mcg + " (4 vertices, 4 edges)\n");
    std::string mg = td.file("mg.imz");
    CliRun tom = cli({"reduce", "mcp2gim", mcg, mg});
    CHECK(tom.code == 0);
    CHECK(ltw::read_imz_file(mg).elements.size() == 18);
    CHECK(cli({"solve", "intermezzo", mg}).code == 0);

    SUBCASE("reduction inputs are checked") {
        std::string nofile = (td.dir / "missing.cnf").string();
        CliRun gone = cli({"reduce", "sat2ltree", nofile, lt});
        CHECK(gone.code == 65);
        CHECK(gone.err == "cannot open '" + nofile + "'\n");

        CliRun needroot = cli({"reduce", "root2unroot", un, td.file("again.lti")});
        CHECK(needroot.code == 65);
        CHECK(needroot.err == "input instance declares no root\n");

        std::string flat = td.file("flat.lti", "root a\ntree a b\n");
        CliRun shallow = cli({"reduce", "ltree2gim", flat, td.file("flat.imz")});
        CHECK(shallow.code == 65);
        CHECK(shallow.err == "height variant needs tree height >= 2\n");
    }
}

TEST_CASE("the cli analyzes instances by extension") {
    TempDir td;
    std::string fig = td.file("fig.lti");
    cli({"gen", "fig4", fig, "--t", "2"});
    CliRun lti = cli({"analyze", fig});
    CHECK(lti.code == 0);
    CHECK(lti.out ==
          "vertices: 5\nedges: 6\nrooted: true\ntree-height: 2\nhooks: 2\nubends: 2\n"
          "necessity: cyclic\n");

    std::string free_inst = td.file("free.lti", "tree a b\n");
    CHECK(cli({"analyze", free_inst}).out == "vertices: 2\nedges: 1\nrooted: false\n");

    std::string imz = td.file("inst.imz", "elem a\nelem b\nelem c\npair a b\n");
    CliRun gim = cli({"analyze", imz});
    CHECK(gim.code == 0);
    CHECK(gim.out.rfind("elements: 3\npairs: 1\ntriples: 0\nconsistent: true\nheight: 2\n"
                        "width: 2\ncs-tree: false\n",
                        0) == 0);
    CHECK(has_line(gim.out, "chain: a b"));
    CHECK(has_line(gim.out, "chain: c"));
    CHECK(has_line(gim.out, "dp-states: 6"));
    CHECK(has_line(gim.out, "dp-bound: 16"));

    std::string cyc = td.file("cyc.imz", "elem a\nelem b\npair a b\npair b a\n");
    CHECK(cli({"analyze", cyc}).out == "elements: 2\npairs: 2\ntriples: 0\nconsistent: false\n");

    CliRun unknown = cli({"analyze", td.file("notes.txt", "x")});
    CHECK(unknown.code == 64);
    CHECK(unknown.err ==
          "cannot infer instance kind from '" + (td.dir / "notes.txt").string() +
              "' (expected .lti or .imz)\n");
}

TEST_CASE("usage and data errors use distinct exit codes") {
    TempDir td;
    CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
    CHECK(help.out.find("reduce") != std::string::npos);

    CliRun unknown = cli({"frobnicate"});
    CHECK(unknown.code == 64);
    CHECK_FALSE(unknown.err.empty());

    CliRun badgen = cli({"gen", "fig4", td.file("x.lti"), "--t", "1"});
    CHECK(badgen.code == 64);
    CHECK(badgen.err == "gen_fig4 needs t >= 2\n");

    std::string void_path = (td.dir / "void.lti").string();
    CliRun missing = cli({"solve", "ltree", void_path});
    CHECK(missing.code == 65);
    CHECK(missing.err == "cannot open '" + void_path + "'\n");

    std::string sparse = td.file("sparse.lti", "root a\nedge a b\n");
    CliRun invalid = cli({"solve", "ltree", sparse});
    CHECK(invalid.code == 65);
    CHECK(invalid.err == "tree edge count 0 does not fit 2 vertices\n");

    std::string loopy = td.file("loopy.imz", "elem a\npair a a\n");
    CliRun badinst = cli({"solve", "intermezzo", loopy});
    CHECK(badinst.code == 65);
    CHECK(badinst.err == "invalid instance: pair with equal components: a\n");
}
