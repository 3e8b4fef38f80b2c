#pragma once

// Least-fixpoint closure of ground rule sets over interned literals.

#include "dspec/syntax.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dspec {

using LitId = std::uint32_t;
using RuleId = std::uint32_t;

/// A set of interned literals; bit i stands for literal id i.
using LitSet = boost::dynamic_bitset<std::uint64_t>;

template <typename F>
void for_each_bit(const LitSet& s, F&& f) {
    for (auto i = s.find_first(); i != LitSet::npos; i = s.find_next(i)) f(static_cast<LitId>(i));
}

/// Ground literals numbered in canonical order.
class LiteralTable {
public:
    LiteralTable() = default;
    /// Interns the given literals; ids follow the canonical literal order.
    explicit LiteralTable(std::set<Literal> literals);

    std::size_t size() const noexcept { return literals_.size(); }
    const Literal& at(LitId id) const { return literals_.at(id); }
    std::optional<LitId> find(const Literal& l) const;
    LitId id(const Literal& l) const;

    LitSet empty_set() const { return LitSet(size()); }
    LitSet to_set(const std::vector<Literal>& ls) const;   // unknown literals are dropped
    std::vector<Literal> to_literals(const LitSet& s) const;

private:
    std::vector<Literal> literals_;
};

struct InternedRule {
    LitId head;
    std::vector<LitId> body;
    RuleKind kind;
};

enum class Strategy {
    SemiNaive,  // worklist with per-literal rule index
    Naive,      // repeated full passes until nothing changes
};

/// Ground rules over a literal table, indexed by body occurrence.
class RuleBase {
public:
    RuleBase() = default;
    /// All rules must be ground.
    explicit RuleBase(std::span<const Rule> rules);

    const LiteralTable& literals() const noexcept { return table_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const InternedRule& rule(RuleId id) const { return interned_.at(id); }
    std::size_t rule_count() const noexcept { return rules_.size(); }
    std::optional<RuleId> find(const Rule& r) const;

    /// Least superset of `seeds` closed under the selected rules.
    LitSet close(const LitSet& seeds, std::span<const RuleId> selected,
                 Strategy strategy = Strategy::SemiNaive) const;
    LitSet close_all(Strategy strategy = Strategy::SemiNaive) const;

private:
    LiteralTable table_;
    std::vector<Rule> rules_;
    std::vector<InternedRule> interned_;
    std::vector<std::vector<RuleId>> occurs_in_body_;
};

/// The theory of a ground rule set: the least set of literals closed under it.
struct Theory {
    std::set<Literal> literals;
    std::string source;

    bool contains(const Literal& l) const { return literals.count(l) != 0; }
};

Theory theory(std::span<const Rule> rules, std::string source = {});
bool derives(std::span<const Rule> rules, const std::vector<Literal>& goal);

/// An atom derived with both polarities, first in canonical order.
std::optional<Atom> contradiction_witness(std::span<const Rule> rules);
std::optional<Atom> contradiction_witness(const LiteralTable& table, const LitSet& derived);

} // namespace dspec
