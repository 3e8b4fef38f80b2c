#pragma once

// Literals, rules and specifications, plus grounding over the Herbrand
// universe of a specification.

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dspec {

struct Term {
    enum class Kind { Constant, Variable };

    Kind kind = Kind::Constant;
    std::string name;

    static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }
    static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }

    bool is_variable() const noexcept { return kind == Kind::Variable; }

    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const noexcept { return args.size(); }
    bool is_ground() const;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

/// An atom with optional classical negation. Ordering is by predicate, then
/// arguments, then polarity (positive first).
struct Literal {
    Atom atom;
    bool negated = false;

    static Literal positive(std::string predicate, std::vector<Term> args = {}) {
        return {{std::move(predicate), std::move(args)}, false};
    }
    static Literal negative(std::string predicate, std::vector<Term> args = {}) {
        return {{std::move(predicate), std::move(args)}, true};
    }

    bool is_ground() const { return atom.is_ground(); }

    auto operator<=>(const Literal&) const = default;
    bool operator==(const Literal&) const = default;
};

Literal complement(const Literal& l);

enum class RuleKind { Fact, StrictGeneral, Defeasible };

/// `head <- body` (strict) or `head <~ body` (defeasible). Facts have an empty
/// body; a general rule may also be body-less.
struct Rule {
    Literal head;
    std::vector<Literal> body;
    RuleKind kind = RuleKind::StrictGeneral;

    static Rule fact(Literal head) { return {std::move(head), {}, RuleKind::Fact}; }
    static Rule strict(Literal head, std::vector<Literal> body) {
        return {std::move(head), std::move(body), RuleKind::StrictGeneral};
    }
    static Rule defeasible(Literal head, std::vector<Literal> body) {
        return {std::move(head), std::move(body), RuleKind::Defeasible};
    }

    bool is_ground() const;
    bool is_strict() const noexcept { return kind != RuleKind::Defeasible; }

    auto operator<=>(const Rule&) const = default;
    bool operator==(const Rule&) const = default;
};

/// The triple of facts, general (strict) rules and defeasible rules. Each
/// container is kept sorted and duplicate-free.
class Specification {
public:
    Specification() = default;
    Specification(std::vector<Rule> facts, std::vector<Rule> general, std::vector<Rule> defeasible);

    /// Routes the rule into the container matching its kind.
    void add(Rule rule);

    const std::vector<Rule>& facts() const noexcept { return facts_; }
    const std::vector<Rule>& general() const noexcept { return general_; }
    const std::vector<Rule>& defeasible() const noexcept { return defeasible_; }

    /// Facts followed by general rules.
    std::vector<Rule> strict() const;
    std::size_t size() const noexcept { return facts_.size() + general_.size() + defeasible_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool is_ground() const;

    bool operator==(const Specification&) const = default;

private:
    std::vector<Rule> facts_;
    std::vector<Rule> general_;
    std::vector<Rule> defeasible_;
};

/// predicate -> arity; throws ArityError on the first conflicting use.
std::map<std::string, std::size_t> check_arity(const Specification& spec);

std::set<std::string> herbrand_universe(const Specification& spec);

/// Every ground instance of `rule` over `universe`, sorted. Throws
/// GroundingError if the rule has variables and the universe is empty.
std::vector<Rule> ground_rule(const Rule& rule, const std::set<std::string>& universe);

Specification ground_spec(const Specification& spec);

/// True iff `ground` is obtained from `schema` by a substitution of its
/// variables (consistent across all occurrences) and has the same kind.
bool is_instance_of(const Rule& ground, const Rule& schema);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);

std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);

} // namespace dspec
