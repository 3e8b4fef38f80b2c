#include "support/helpers.hpp"

#include "dspec/error.hpp"
#include "dspec/syntax.hpp"

#include <doctest.h>

using namespace dspec;
using namespace dspec::testing;

namespace {

const char* example1 = R"(
fact bird(tweety).
fact emu(edna).
strict bird(X) <- emu(X).
strict ~flies(X) <- emu(X).
defeasible flies(X) <~ bird(X).
)";

Rule rule(const char* text) { return parse_rule(text); }

} // namespace

TEST_SUITE("logic-core") {

TEST_CASE("herbrand universe of a first-order spec") {
    CHECK(herbrand_universe(parse_spec(example1)) == std::set<std::string>{"edna", "tweety"});
}

TEST_CASE("herbrand universe of a propositional spec is empty") {
    CHECK(herbrand_universe(parse_spec("fact thirst. strict drink <- thirst. defeasible beer <~ thirst.")).empty());
}

TEST_CASE("herbrand universe of the empty spec is empty") { CHECK(herbrand_universe(Specification{}).empty()); }

TEST_CASE("ground_rule enumerates every substitution") {
    const auto g = ground_rule(rule("bird(X) <- emu(X)"), {"tweety", "edna"});
    const std::vector<Rule> expected{rule("bird(edna) <- emu(edna)"), rule("bird(tweety) <- emu(tweety)")};
    CHECK(g == expected);
}

TEST_CASE("ground_rule is the identity on ground rules") {
    const Rule f = Rule::fact(lit("emu(edna)"));
    CHECK(ground_rule(f, {"tweety", "edna"}) == std::vector<Rule>{f});
    CHECK(ground_rule(f, {}) == std::vector<Rule>{f});
}

TEST_CASE("ground_rule over an empty universe fails for rules with variables") {
    CHECK_THROWS_AS(ground_rule(rule("flies(X) <~ bird(X)"), {}), GroundingError);
}

TEST_CASE("ground_rule handles several variables and head-only variables") {
    const auto g = ground_rule(rule("r(X, Y) <- p(X)"), {"a", "b"});
    CHECK(g.size() == 4);
    for (const auto& r : g) CHECK(r.is_ground());
}

TEST_CASE("ground_spec of example 1") {
    const auto g = ground_spec(parse_spec(example1));
    CHECK(g.facts().size() == 2);
    CHECK(g.general().size() == 4);
    CHECK(g.defeasible().size() == 2);
    CHECK(g.is_ground());
}

TEST_CASE("ground_spec leaves a propositional spec unchanged and is idempotent") {
    const auto s = parse_spec("fact thirst. strict drink <- thirst. defeasible beer <~ thirst.");
    CHECK(ground_spec(s) == s);
    const auto g = ground_spec(parse_spec(example1));
    CHECK(ground_spec(g) == g);
}

TEST_CASE("complement") {
    CHECK(complement(lit("flies(edna)")) == lit("~flies(edna)"));
    CHECK(complement(lit("~flies(edna)")) == lit("flies(edna)"));
    CHECK(complement(lit("p")) == lit("~p"));
}

TEST_CASE("canonical literal order: predicate, arguments, then positive before negative") {
    CHECK(lit("a") < lit("~a"));
    CHECK(lit("~a") < lit("b"));
    CHECK(lit("p(a)") < lit("p(b)"));
    CHECK(lit("~p(a)") < lit("p(b)"));
}

TEST_CASE("arity conflicts are rejected") {
    Specification s;
    s.add(Rule::fact(lit("p(a)")));
    s.add(Rule::fact(lit("p(a, b)")));
    CHECK_THROWS_AS(check_arity(s), ArityError);
    CHECK_THROWS_AS(Program{s}, ArityError);
}

TEST_CASE("rule kinds are validated by the specification") {
    Specification s;
    CHECK_THROWS_AS(s.add(Rule{lit("p"), {lit("q")}, RuleKind::Fact}), Error);
    CHECK_THROWS_AS(s.add(Rule{lit("p"), {}, RuleKind::Defeasible}), Error);
}

TEST_CASE("rendering") {
    CHECK(to_string(lit("~p(a, b)")) == "~p(a,b)");
    CHECK(to_string(rule("h <- b1, b2")) == "h <- b1, b2");
    CHECK(to_string(rule("h <~ b1")) == "h <~ b1");
    CHECK(to_string(rule("h")) == "h");
}

TEST_CASE("property: grounding invariants on first-order corpus specs and random specs") {
    std::vector<Specification> specs;
    for (const auto& f : corpus_files()) specs.push_back(load_spec(f));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) specs.push_back(random_spec(rng));
    specs.push_back(parse_spec("fact p(a). fact q(b). strict r(X, Y) <- p(X), q(Y). defeasible s(X) <~ r(X, X)."));

    for (const auto& s : specs) {
        const auto g = ground_spec(s);
        CHECK(ground_spec(g) == g);
        CHECK(herbrand_universe(g) == herbrand_universe(s));
        CHECK(g.is_ground());
        auto check_instances = [&](const std::vector<Rule>& ground, const std::vector<Rule>& schemas, RuleKind kind) {
            for (const auto& r : ground) {
                CHECK(r.kind == kind);
                CHECK(std::any_of(schemas.begin(), schemas.end(), [&](const Rule& sc) { return is_instance_of(r, sc); }));
            }
        };
        check_instances(g.facts(), s.facts(), RuleKind::Fact);
        check_instances(g.general(), s.general(), RuleKind::StrictGeneral);
        check_instances(g.defeasible(), s.defeasible(), RuleKind::Defeasible);
    }
}

TEST_CASE("property: complement is an involution") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto spec = random_spec(rng);
        for (const auto& r : spec.defeasible()) {
            CHECK(complement(complement(r.head)) == r.head);
            CHECK(complement(r.head) != r.head);
        }
    }
}

TEST_CASE("is_instance_of requires a consistent substitution") {
    CHECK(is_instance_of(rule("p(a, a)"), rule("p(X, X)")));
    CHECK_FALSE(is_instance_of(rule("p(a, b)"), rule("p(X, X)")));
    CHECK_FALSE(is_instance_of(rule("p(a) <~ q(a)"), rule("p(X) <- q(X)")));
}

}
