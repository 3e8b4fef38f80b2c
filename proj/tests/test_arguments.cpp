#include "support/helpers.hpp"

#include "dspec/arguments.hpp"
#include "dspec/error.hpp"

#include <doctest.h>

using namespace dspec;
using namespace dspec::testing;

TEST_SUITE("arguments") {

TEST_CASE("make_argument on example 1") {
    const auto p = load("example1");
    const Rule a2 = parse_rule("flies(edna) <~ bird(edna)");
    CHECK_NOTHROW(make_argument(*p, {a2}, lit("flies(edna)")));
    CHECK_NOTHROW(make_argument(*p, {}, lit("~flies(edna)")));
    CHECK_THROWS_AS(make_argument(*p, {}, lit("flies(edna)")), NotAnArgumentError);
}

TEST_CASE("make_argument rejects rules that are not defeasible instances") {
    const auto p = load("example1");
    CHECK_THROWS_AS(make_argument(*p, {parse_rule("flies(edna) <- bird(edna)")}, lit("flies(edna)")), ForeignRuleError);
    CHECK_THROWS_AS(make_argument(*p, {parse_rule("flies(X) <~ bird(X)")}, lit("flies(edna)")), ForeignRuleError);
    CHECK_THROWS_AS(make_argument(*p, {parse_rule("flies(bob) <~ bird(bob)")}, lit("flies(edna)")), ForeignRuleError);
}

TEST_CASE("make_argument accepts contradictory and non-minimal supports") {
    const auto p = load("example1");
    const auto both = std::vector<Rule>{parse_rule("flies(edna) <~ bird(edna)"), parse_rule("flies(tweety) <~ bird(tweety)")};
    CHECK_NOTHROW(make_argument(*p, both, lit("flies(edna)")));
    CHECK_NOTHROW(make_argument(*p, {parse_rule("flies(edna) <~ bird(edna)")}, lit("~flies(edna)")));
}

TEST_CASE("enumerate_arguments on example 1") {
    const auto p = load("example1");
    const auto a = enumerate_arguments(*p, lit("flies(edna)"), true);
    REQUIRE(a.size() == 1);
    CHECK(a[0].support == std::vector<Rule>{parse_rule("flies(edna) <~ bird(edna)")});

    const auto b = enumerate_arguments(*p, lit("~flies(edna)"), true);
    REQUIRE(b.size() == 1);
    CHECK(b[0].support.empty());

    CHECK(enumerate_arguments(*p, lit("~flies(tweety)"), true).empty());
    CHECK(enumerate_arguments(*p, lit("~flies(tweety)"), false).empty());
}

TEST_CASE("strict conclusions have exactly the empty minimal support") {
    for (const auto& f : corpus_files()) {
        const Program p(load_spec(f));
        for (const auto& l : p.literals().to_literals(p.strict_theory())) {
            const auto a = enumerate_arguments(p, l, true);
            REQUIRE(a.size() == 1);
            CHECK(a[0].support.empty());
        }
    }
}

TEST_CASE("is_minimal") {
    const auto p = load("example1");
    const Rule a2 = parse_rule("flies(edna) <~ bird(edna)");
    CHECK(is_minimal(*p, {{a2}, lit("flies(edna)")}));
    CHECK_FALSE(is_minimal(*p, {{a2}, lit("~flies(edna)")}));
    CHECK(is_minimal(*p, {{}, lit("~flies(edna)")}));
}

TEST_CASE("full enumeration is ordered by ascending support size") {
    const auto p = load("beer_wine_vodka");
    const auto all = enumerate_arguments(*p, lit("wine"), false);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].support.size() <= all[i].support.size());
}

TEST_CASE("the enumeration cap raises a resource error") {
    Limits limits;
    limits.max_ground_defeasible = 2;
    const auto p = load("beer_wine_vodka", limits);
    CHECK_THROWS_AS(enumerate_arguments(*p, lit("wine"), false), ResourceError);
    CHECK_THROWS_AS(collect_arguments(*load("frieder4"), false, 3), ResourceError);
}

TEST_CASE("property: enumeration invariants on corpus and random specs") {
    std::vector<Specification> specs;
    for (const auto& f : corpus_files()) specs.push_back(load_spec(f));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) specs.push_back(random_spec(rng));

    for (const auto& s : specs) {
        const Program p(s);
        for (const auto& l : p.literals().to_literals(p.full_theory())) {
            const auto all = enumerate_arguments(p, l, false);
            const auto minimal = enumerate_arguments(p, l, true);
            CHECK(std::is_sorted(minimal.begin(), minimal.end()));
            for (const auto& a : all) CHECK_NOTHROW(make_argument(p, a.support, a.conclusion));

            // Minimal mode returns exactly the subset-minimal elements of the full output.
            std::vector<Argument> expected;
            for (const auto& a : all) {
                const DeltaSet da = p.delta_set(a.support);
                const bool has_smaller = std::any_of(all.begin(), all.end(), [&](const Argument& b) {
                    const DeltaSet db = p.delta_set(b.support);
                    return db != da && db.is_subset_of(da);
                });
                if (!has_smaller) expected.push_back(a);
            }
            std::sort(expected.begin(), expected.end());
            CHECK(minimal == expected);
            for (const auto& a : minimal) CHECK(is_minimal(p, a));

            // Superset closure: every superset of a support is present.
            std::set<DeltaSet> supports;
            for (const auto& a : all) supports.insert(p.delta_set(a.support));
            for (const auto& d : supports)
                for (std::size_t i = 0; i < p.defeasible_count(); ++i) {
                    DeltaSet bigger = d;
                    bigger.set(i);
                    CHECK(supports.count(bigger) == 1);
                }
        }
    }
}

}
