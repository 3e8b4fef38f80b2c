#include "dspec/closure.hpp"

#include "dspec/error.hpp"

#include <algorithm>

namespace dspec {

LiteralTable::LiteralTable(std::set<Literal> literals) : literals_(literals.begin(), literals.end()) {}

std::optional<LitId> LiteralTable::find(const Literal& l) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
    if (it == literals_.end() || *it != l) return std::nullopt;
    return static_cast<LitId>(it - literals_.begin());
}

LitId LiteralTable::id(const Literal& l) const {
    if (auto id = find(l)) return *id;
    throw Error("unknown literal: " + to_string(l));
}

LitSet LiteralTable::to_set(const std::vector<Literal>& ls) const {
    LitSet out = empty_set();
    for (const auto& l : ls)
        if (auto id = find(l)) out.set(*id);
    return out;
}

std::vector<Literal> LiteralTable::to_literals(const LitSet& s) const {
    std::vector<Literal> out;
    for_each_bit(s, [&](LitId id) { out.push_back(literals_[id]); });
    return out;
}

RuleBase::RuleBase(std::span<const Rule> rules) : rules_(rules.begin(), rules.end()) {
    std::set<Literal> lits;
    for (const auto& r : rules_) {
        if (!r.is_ground()) throw Error("rule is not ground: " + to_string(r));
        lits.insert(r.head);
        lits.insert(r.body.begin(), r.body.end());
    }
    table_ = LiteralTable(std::move(lits));
    occurs_in_body_.assign(table_.size(), {});
    interned_.reserve(rules_.size());
    for (RuleId id = 0; id < rules_.size(); ++id) {
        const auto& r = rules_[id];
        InternedRule ir{table_.id(r.head), {}, r.kind};
        for (const auto& l : r.body) {
            LitId b = table_.id(l);
            if (std::find(ir.body.begin(), ir.body.end(), b) == ir.body.end()) ir.body.push_back(b);
        }
        for (LitId b : ir.body) occurs_in_body_[b].push_back(id);
        interned_.push_back(std::move(ir));
    }
}

std::optional<RuleId> RuleBase::find(const Rule& r) const {
    auto it = std::find(rules_.begin(), rules_.end(), r);
    if (it == rules_.end()) return std::nullopt;
    return static_cast<RuleId>(it - rules_.begin());
}

LitSet RuleBase::close(const LitSet& seeds, std::span<const RuleId> selected, Strategy strategy) const {
    LitSet derived = seeds;
    derived.resize(table_.size());

    if (strategy == Strategy::Naive) {
        for (bool changed = true; changed;) {
            changed = false;
            for (RuleId id : selected) {
                const auto& r = interned_[id];
                if (derived.test(r.head)) continue;
                if (std::all_of(r.body.begin(), r.body.end(), [&](LitId b) { return derived.test(b); })) {
                    derived.set(r.head);
                    changed = true;
                }
            }
        }
        return derived;
    }

    // remaining[id] counts body literals not yet derived; -1 marks unselected rules.
    std::vector<int> remaining(interned_.size(), -1);
    std::vector<LitId> queue;
    auto fire = [&](LitId head) {
        if (!derived.test(head)) {
            derived.set(head);
            queue.push_back(head);
        }
    };
    for (RuleId id : selected) remaining[id] = static_cast<int>(interned_[id].body.size());
    for_each_bit(derived, [&](LitId l) { queue.push_back(l); });
    for (RuleId id : selected)
        if (remaining[id] == 0) fire(interned_[id].head);

    while (!queue.empty()) {
        LitId l = queue.back();
        queue.pop_back();
        for (RuleId id : occurs_in_body_[l]) {
            if (remaining[id] <= 0) continue;
            if (--remaining[id] == 0) fire(interned_[id].head);
        }
    }
    return derived;
}

LitSet RuleBase::close_all(Strategy strategy) const {
    std::vector<RuleId> all(rules_.size());
    for (RuleId id = 0; id < all.size(); ++id) all[id] = id;
    return close(table_.empty_set(), all, strategy);
}

Theory theory(std::span<const Rule> rules, std::string source) {
    RuleBase base(rules);
    auto lits = base.literals().to_literals(base.close_all());
    return {std::set<Literal>(lits.begin(), lits.end()), std::move(source)};
}

bool derives(std::span<const Rule> rules, const std::vector<Literal>& goal) {
    const auto t = theory(rules);
    return std::all_of(goal.begin(), goal.end(), [&](const Literal& l) { return t.contains(l); });
}

std::optional<Atom> contradiction_witness(const LiteralTable& table, const LitSet& derived) {
    // A positive literal and its complement are adjacent in canonical order.
    for (LitId id = 0; id + 1 < table.size(); ++id) {
        const auto& l = table.at(id);
        if (!l.negated && derived.test(id) && derived.test(id + 1) && table.at(id + 1).negated &&
            table.at(id + 1).atom == l.atom)
            return l.atom;
    }
    return std::nullopt;
}

std::optional<Atom> contradiction_witness(std::span<const Rule> rules) {
    RuleBase base(rules);
    return contradiction_witness(base.literals(), base.close_all());
}

} // namespace dspec
