#include "dspec/program.hpp"

#include "dspec/error.hpp"

#include <algorithm>

namespace dspec {

namespace {

std::vector<Rule> all_rules(const Specification& s) {
    std::vector<Rule> out = s.facts();
    out.insert(out.end(), s.general().begin(), s.general().end());
    out.insert(out.end(), s.defeasible().begin(), s.defeasible().end());
    return out;
}

} // namespace

Program::Program(const Specification& spec, Limits limits)
    : source_(spec)
    , limits_(limits) {
    check_arity(spec);
    ground_ = ground_spec(spec);
    const auto rules = all_rules(ground_);
    base_ = RuleBase(rules);

    RuleId id = 0;
    for (std::size_t i = 0; i < ground_.facts().size(); ++i) facts_.push_back(id++);
    for (std::size_t i = 0; i < ground_.general().size(); ++i) general_.push_back(id++);
    for (std::size_t i = 0; i < ground_.defeasible().size(); ++i) defeasible_.push_back(id++);
    strict_ = facts_;
    strict_.insert(strict_.end(), general_.begin(), general_.end());

    strict_theory_ = base_.close(literals().empty_set(), strict_);
    full_theory_ = close_strict(literals().empty_set(), all_delta());
}

DeltaSet Program::delta_set(std::span<const Rule> support) const {
    DeltaSet out = empty_delta();
    const auto& instances = ground_.defeasible();
    for (const auto& r : support) {
        auto it = std::lower_bound(instances.begin(), instances.end(), r);
        if (it == instances.end() || *it != r)
            throw ForeignRuleError("'" + to_string(r) +
                                   "' is not a ground instance of a defeasible rule of the specification");
        out.set(static_cast<std::size_t>(it - instances.begin()));
    }
    return out;
}

std::vector<Rule> Program::delta_rules(const DeltaSet& support) const {
    std::vector<Rule> out;
    for (auto i = support.find_first(); i != DeltaSet::npos; i = support.find_next(i))
        out.push_back(defeasible_rule(i));
    return out;
}

std::vector<RuleId> Program::selection(std::span<const RuleId> base, const DeltaSet& support) const {
    std::vector<RuleId> out(base.begin(), base.end());
    for (auto i = support.find_first(); i != DeltaSet::npos; i = support.find_next(i))
        out.push_back(defeasible_[i]);
    return out;
}

LitSet Program::close_strict(const LitSet& seeds, const DeltaSet& support) const {
    return base_.close(seeds, selection(strict_, support));
}

LitSet Program::close_general(const LitSet& seeds, const DeltaSet& support) const {
    auto key = std::make_pair(seeds, support);
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = general_memo_.find(key); it != general_memo_.end()) return it->second;
    }
    LitSet out = base_.close(seeds, selection(general_, support));
    std::lock_guard lock(memo_mutex_);
    general_memo_.emplace(std::move(key), out);
    return out;
}

bool Program::derives(const DeltaSet& support, LitId goal) const {
    if (strict_theory_.test(goal)) return true;
    if (!full_theory_.test(goal)) return false;
    return close_strict(literals().empty_set(), support).test(goal);
}

std::optional<Atom> Program::contradiction() const { return contradiction_witness(literals(), full_theory_); }

} // namespace dspec
