#include "support/helpers.hpp"

#include "dspec/error.hpp"
#include "dspec/specificity.hpp"
#include "dspec/syntactic.hpp"

#include <doctest.h>

using namespace dspec;
using namespace dspec::testing;

namespace {

const char* d1 = "<{c1 <~ a, b; d <~ c1}, d>";
const char* d2 = "<{c2 <~ a; ~d <~ c2}, ~d>";

bool every_path_contains(const DerivationTree& t, const Literal& l) {
    const auto paths = paths_of(t);
    return std::all_of(paths.begin(), paths.end(), [&](const Path& p) { return p.count(l) == 1; });
}

bool no_path_contains(const DerivationTree& t, const Literal& l) {
    const auto paths = paths_of(t);
    return std::none_of(paths.begin(), paths.end(), [&](const Path& p) { return p.count(l) == 1; });
}

} // namespace

TEST_SUITE("syntactic") {

TEST_CASE("frieder 4: two trees per argument") {
    const auto p = load("frieder4");
    CHECK(derivation_trees(*p, parse_argument("<{f <~ d, e; b <~ a}, f>", *p)).size() == 2);
    CHECK(derivation_trees(*p, parse_argument("<{~f <~ d; b <~ a}, ~f>", *p)).size() == 2);
    CHECK(compare(*p, Relation::P3, parse_argument("<{f <~ d, e; b <~ a}, f>", *p),
                  parse_argument("<{~f <~ d; b <~ a}, ~f>", *p)) == Outcome::MoreSpecific);
}

TEST_CASE("failure: one tree per argument with separated paths") {
    const auto p = load("failure");
    const Argument a1 = parse_argument(d1, *p);
    const Argument a2 = parse_argument(d2, *p);
    const auto t1 = derivation_trees(*p, a1);
    const auto t2 = derivation_trees(*p, a2);
    REQUIRE(t1.size() == 1);
    REQUIRE(t2.size() == 1);
    CHECK(every_path_contains(t1[0], lit("c1")));
    CHECK(no_path_contains(t1[0], lit("c2")));
    CHECK(every_path_contains(t2[0], lit("c2")));
    CHECK(no_path_contains(t2[0], lit("c1")));
    CHECK_FALSE(tree_leq(t1[0], t2[0]));
    CHECK_FALSE(syntactic_leq(*p, a1, a2));
    CHECK(compare(*p, Relation::CP, a1, a2) == Outcome::MoreSpecific);
}

TEST_CASE("a fact argument has the single-node tree with the empty path") {
    const auto p = load("failure");
    const auto t = derivation_trees(*p, parse_argument("<{}, a>", *p));
    REQUIRE(t.size() == 1);
    CHECK(t[0].children.empty());
    CHECK(paths_of(t[0]) == std::set<Path>{Path{}});
    // The empty path lies below every path.
    for (const auto& other : derivation_trees(*p, parse_argument(d1, *p))) CHECK(tree_leq(t[0], other));
}

TEST_CASE("paths exclude the root and include the leaf") {
    const auto p = load("example1");
    const auto t = derivation_trees(*p, parse_argument("<{flies(edna) <~ bird(edna)}, flies(edna)>", *p));
    REQUIRE(t.size() == 1);
    CHECK(paths_of(t[0]) == std::set<Path>{Path{lit("bird(edna)"), lit("emu(edna)")}});
}

TEST_CASE("trees only use strict rules and the argument's support") {
    const auto p = load("example1");
    for (const auto& t : derivation_trees(*p, parse_argument("<{}, ~flies(edna)>", *p))) {
        std::function<void(const DerivationTree&)> visit = [&](const DerivationTree& n) {
            CHECK(n.rule.is_strict());
            CHECK(n.rule.head == n.label);
            REQUIRE(n.children.size() == n.rule.body.size());
            for (std::size_t i = 0; i < n.children.size(); ++i) CHECK(n.children[i].label == n.rule.body[i]);
            for (const auto& c : n.children) visit(c);
        };
        visit(t);
    }
}

TEST_CASE("cyclic rules terminate through the path guard") {
    const auto p = program_of("fact a. strict b <- a. strict a <- b. strict c <- a, b.");
    const auto trees = derivation_trees(*p, Argument{{}, lit("c")});
    REQUIRE(trees.size() == 1);
    CHECK(paths_of(trees[0]) == std::set<Path>{Path{lit("a")}, Path{lit("a"), lit("b")}});
}

TEST_CASE("the tree cap raises a resource error") {
    Limits limits;
    limits.max_trees = 1;
    const auto p = load("frieder4", limits);
    CHECK_THROWS_AS(derivation_trees(*p, parse_argument("<{f <~ d, e; b <~ a}, f>", *p)), ResourceError);
}

TEST_CASE("property: tree_leq is reflexive and transitive, syntactic_leq reflexive") {
    for (const auto& f : corpus_files()) {
        const Program p(load_spec(f));
        std::vector<DerivationTree> trees;
        for (const auto& a : check_population(p, 64)) {
            CHECK(syntactic_leq(p, a, a));
            for (auto& t : derivation_trees(p, a)) trees.push_back(std::move(t));
        }
        if (trees.size() > 40) trees.resize(40);
        for (const auto& x : trees) CHECK(tree_leq(x, x));
        for (const auto& x : trees)
            for (const auto& y : trees)
                if (tree_leq(x, y))
                    for (const auto& z : trees)
                        if (tree_leq(y, z)) CHECK(tree_leq(x, z));
    }
}

TEST_CASE("without general strict rules the syntactic relation lies within P2 on minimal arguments") {
    std::mt19937_64 rng(31);
    std::size_t compared = 0;
    for (int round = 0; round < 400; ++round) {
        const auto raw = random_spec(rng, 6, 10);
        Specification spec;
        for (const auto& r : raw.strict())
            if (r.body.empty()) spec.add(r);
        for (const auto& r : raw.defeasible()) spec.add(r);
        const Program p(spec);
        const auto args = collect_arguments(p, true, 64);
        const LeqMatrix p2(p, Relation::P2, args);
        for (std::size_t i = 0; i < args.size(); ++i)
            for (std::size_t j = 0; j < args.size(); ++j) {
                if (!syntactic_leq(p, args[i], args[j])) continue;
                ++compared;
                const auto context = render_argument(args[i]) + " vs " + render_argument(args[j]);
                CHECK_MESSAGE(p2(i, j), context);
            }
    }
    CHECK(compared > 0);
}

TEST_CASE("a general strict rule can separate syntactically comparable minimal arguments under P2 and P3") {
    const auto p = load("stolzenburg11");
    const Argument a1 = parse_argument("<{x <~ a, b, c; a <~ d; b <~ e}, x>", *p);
    const Argument a2 = parse_argument("<{~x <~ a, b; a <~ d; b <~ e}, ~x>", *p);
    CHECK(is_minimal(*p, a1));
    CHECK(is_minimal(*p, a2));
    CHECK(syntactic_leq(*p, a1, a2));
    CHECK_FALSE(leq(*p, Relation::P2, a1, a2));
    CHECK_FALSE(leq(*p, Relation::P3, a1, a2));
    CHECK(leq(*p, Relation::CP, a1, a2));
}

TEST_CASE("unused support rules are invisible to the syntactic relation but not to P2") {
    const auto p = program_of("fact ~p0. fact p3. fact ~p4. defeasible p2 <~ ~p4. defeasible p3 <~ p2.");
    const Argument a1 = parse_argument("<{p3 <~ p2}, p3>", *p);
    const Argument a2 = parse_argument("<{}, ~p0>", *p);
    CHECK_FALSE(is_minimal(*p, a1));
    CHECK(syntactic_leq(*p, a1, a2));
    CHECK_FALSE(leq(*p, Relation::P2, a1, a2));
}

TEST_CASE("the syntactic relation is not contained in P3 when only the right conclusion is strict") {
    const auto p = load("stolzenburg_p95");
    const Argument a1 = parse_argument("<{~p(a) <~ q(a), s(a)}, ~p(a)>", *p);
    const Argument a2 = parse_argument("<{}, s(a)>", *p);
    CHECK(syntactic_leq(*p, a1, a2));
    CHECK(leq(*p, Relation::P2, a1, a2));
    CHECK_FALSE(leq(*p, Relation::P3, a1, a2));
}

TEST_CASE("CP is not contained in the syntactic relation") {
    const auto p = load("failure");
    const Argument a1 = parse_argument(d1, *p), a2 = parse_argument(d2, *p);
    CHECK(leq(*p, Relation::CP, a1, a2));
    CHECK_FALSE(syntactic_leq(*p, a1, a2));
}

TEST_CASE("text rendering") {
    const auto p = load("example1");
    const auto t = derivation_trees(*p, parse_argument("<{flies(edna) <~ bird(edna)}, flies(edna)>", *p));
    CHECK(render_tree_text(t[0]) == "flies(edna) <~ bird(edna)\n  bird(edna) <- emu(edna)\n    emu(edna)\n");
}

TEST_CASE("dot rendering doubles strict edges") {
    const auto p = load("example1");
    const auto t = derivation_trees(*p, parse_argument("<{flies(edna) <~ bird(edna)}, flies(edna)>", *p));
    CHECK(render_tree_dot(t[0], "T1") ==
          "digraph \"T1\" {\n"
          "  n0 [label=\"flies(edna)\"];\n"
          "  n1 [label=\"bird(edna)\"];\n"
          "  n2 [label=\"emu(edna)\"];\n"
          "  n1 -> n2 [color=\"black:black\"];\n"
          "  n0 -> n1;\n"
          "}\n");
}

}
