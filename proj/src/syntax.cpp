#include "dspec/syntax.hpp"

#include "dspec/error.hpp"

#include <algorithm>
#include <ostream>

namespace dspec {

namespace {

void normalize(std::vector<Rule>& rules) {
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
}

template <typename F>
void for_each_literal(const Rule& r, F&& f) {
    f(r.head);
    for (const auto& l : r.body) f(l);
}

void collect_variables(const Rule& r, std::vector<std::string>& out) {
    for_each_literal(r, [&](const Literal& l) {
        for (const auto& t : l.atom.args)
            if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end())
                out.push_back(t.name);
    });
}

Literal substitute(const Literal& l, const std::map<std::string, std::string>& sigma) {
    Literal out = l;
    for (auto& t : out.atom.args)
        if (t.is_variable()) t = Term::constant(sigma.at(t.name));
    return out;
}

// Extends sigma so that schema matches ground; false on a clash.
bool match(const Literal& ground, const Literal& schema, std::map<std::string, std::string>& sigma) {
    if (ground.negated != schema.negated || ground.atom.predicate != schema.atom.predicate ||
        ground.atom.arity() != schema.atom.arity())
        return false;
    for (std::size_t i = 0; i < schema.atom.args.size(); ++i) {
        const auto& s = schema.atom.args[i];
        const auto& g = ground.atom.args[i];
        if (g.is_variable()) return false;
        if (!s.is_variable()) {
            if (s.name != g.name) return false;
            continue;
        }
        auto [it, inserted] = sigma.emplace(s.name, g.name);
        if (!inserted && it->second != g.name) return false;
    }
    return true;
}

} // namespace

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

Literal complement(const Literal& l) {
    Literal out = l;
    out.negated = !l.negated;
    return out;
}

bool Rule::is_ground() const {
    return head.is_ground() &&
           std::all_of(body.begin(), body.end(), [](const Literal& l) { return l.is_ground(); });
}

Specification::Specification(std::vector<Rule> facts, std::vector<Rule> general, std::vector<Rule> defeasible) {
    for (auto& r : facts) add(std::move(r));
    for (auto& r : general) add(std::move(r));
    for (auto& r : defeasible) add(std::move(r));
}

void Specification::add(Rule rule) {
    std::vector<Rule>* target = nullptr;
    switch (rule.kind) {
    case RuleKind::Fact:
        if (!rule.body.empty()) throw Error("fact with a non-empty body: " + to_string(rule));
        target = &facts_;
        break;
    case RuleKind::StrictGeneral: target = &general_; break;
    case RuleKind::Defeasible:
        if (rule.body.empty()) throw Error("defeasible rule without a body: " + to_string(rule));
        target = &defeasible_;
        break;
    }
    auto pos = std::lower_bound(target->begin(), target->end(), rule);
    if (pos == target->end() || *pos != rule) target->insert(pos, std::move(rule));
}

std::vector<Rule> Specification::strict() const {
    std::vector<Rule> out = facts_;
    out.insert(out.end(), general_.begin(), general_.end());
    return out;
}

bool Specification::is_ground() const {
    auto ground = [](const std::vector<Rule>& rs) {
        return std::all_of(rs.begin(), rs.end(), [](const Rule& r) { return r.is_ground(); });
    };
    return ground(facts_) && ground(general_) && ground(defeasible_);
}

std::map<std::string, std::size_t> check_arity(const Specification& spec) {
    std::map<std::string, std::size_t> arity;
    auto visit = [&](const Rule& r) {
        for_each_literal(r, [&](const Literal& l) {
            auto [it, inserted] = arity.emplace(l.atom.predicate, l.atom.arity());
            if (!inserted && it->second != l.atom.arity())
                throw ArityError("predicate '" + l.atom.predicate + "' used with arity " +
                                 std::to_string(l.atom.arity()) + " and " + std::to_string(it->second));
        });
    };
    for (const auto& r : spec.facts()) visit(r);
    for (const auto& r : spec.general()) visit(r);
    for (const auto& r : spec.defeasible()) visit(r);
    return arity;
}

std::set<std::string> herbrand_universe(const Specification& spec) {
    std::set<std::string> out;
    auto visit = [&](const Rule& r) {
        for_each_literal(r, [&](const Literal& l) {
            for (const auto& t : l.atom.args)
                if (!t.is_variable()) out.insert(t.name);
        });
    };
    for (const auto& r : spec.facts()) visit(r);
    for (const auto& r : spec.general()) visit(r);
    for (const auto& r : spec.defeasible()) visit(r);
    return out;
}

std::vector<Rule> ground_rule(const Rule& rule, const std::set<std::string>& universe) {
    std::vector<std::string> vars;
    collect_variables(rule, vars);
    if (vars.empty()) return {rule};
    if (universe.empty())
        throw GroundingError("cannot ground '" + to_string(rule) + "': the Herbrand universe is empty");

    const std::vector<std::string> constants(universe.begin(), universe.end());
    std::vector<std::size_t> choice(vars.size(), 0);
    std::vector<Rule> out;
    for (;;) {
        std::map<std::string, std::string> sigma;
        for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i]] = constants[choice[i]];
        Rule g{substitute(rule.head, sigma), {}, rule.kind};
        g.body.reserve(rule.body.size());
        for (const auto& l : rule.body) g.body.push_back(substitute(l, sigma));
        out.push_back(std::move(g));

        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == constants.size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    normalize(out);
    return out;
}

Specification ground_spec(const Specification& spec) {
    const auto universe = herbrand_universe(spec);
    Specification out;
    auto expand = [&](const std::vector<Rule>& rules) {
        for (const auto& r : rules)
            for (auto& g : ground_rule(r, universe)) out.add(std::move(g));
    };
    expand(spec.facts());
    expand(spec.general());
    expand(spec.defeasible());
    return out;
}

bool is_instance_of(const Rule& ground, const Rule& schema) {
    if (ground.kind != schema.kind || ground.body.size() != schema.body.size()) return false;
    std::map<std::string, std::string> sigma;
    if (!match(ground.head, schema.head, sigma)) return false;
    for (std::size_t i = 0; i < schema.body.size(); ++i)
        if (!match(ground.body[i], schema.body[i], sigma)) return false;
    return true;
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ',';
            out += a.args[i].name;
        }
        out += ')';
    }
    return out;
}

std::string to_string(const Literal& l) { return (l.negated ? "~" : "") + to_string(l.atom); }

std::string to_string(const Rule& r) {
    std::string out = to_string(r.head);
    if (r.body.empty()) return out;
    out += r.kind == RuleKind::Defeasible ? " <~ " : " <- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i) out += ", ";
        out += to_string(r.body[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << to_string(l); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << to_string(r); }

} // namespace dspec
