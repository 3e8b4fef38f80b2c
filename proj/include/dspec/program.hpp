#pragma once

// A grounded, interned specification with its two cached theories: the
// strict one (facts and general rules) and the one including all defeasible
// rule instances.

#include "dspec/closure.hpp"
#include "dspec/syntax.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace dspec {

/// Caps on the exhaustive searches. Exceeding one raises ResourceError.
struct Limits {
    std::size_t max_ground_defeasible = 20;  // argument enumeration
    std::size_t max_domain = 22;             // activation-set domains
    std::size_t max_args = 64;               // argument collections for checks
    std::size_t max_trees = 10000;           // derivation trees per argument
    std::size_t max_condition_pairs = std::size_t{1} << 22;  // (H, A) pairs for condition 1
};

/// Bit i stands for the i-th ground defeasible rule instance.
using DeltaSet = boost::dynamic_bitset<std::uint64_t>;

class Program {
public:
    explicit Program(const Specification& spec, Limits limits = {});

    Program(const Program&) = delete;
    Program& operator=(const Program&) = delete;

    const Specification& source() const noexcept { return source_; }
    const Specification& ground() const noexcept { return ground_; }
    const Limits& limits() const noexcept { return limits_; }
    const RuleBase& rules() const noexcept { return base_; }
    const LiteralTable& literals() const noexcept { return base_.literals(); }

    std::span<const RuleId> fact_rules() const noexcept { return facts_; }
    std::span<const RuleId> general_rules() const noexcept { return general_; }
    std::span<const RuleId> strict_rules() const noexcept { return strict_; }
    std::span<const RuleId> defeasible_rules() const noexcept { return defeasible_; }

    std::size_t defeasible_count() const noexcept { return defeasible_.size(); }
    const Rule& defeasible_rule(std::size_t i) const { return base_.rules().at(defeasible_.at(i)); }
    DeltaSet empty_delta() const { return DeltaSet(defeasible_.size()); }
    DeltaSet all_delta() const { return ~empty_delta(); }

    /// Maps support rules to instance indices. Throws ForeignRuleError for a
    /// rule that is not a ground defeasible instance over the universe.
    DeltaSet delta_set(std::span<const Rule> support) const;
    std::vector<Rule> delta_rules(const DeltaSet& support) const;

    /// T_Pi
    const LitSet& strict_theory() const noexcept { return strict_theory_; }
    /// T_{Pi u Delta}
    const LitSet& full_theory() const noexcept { return full_theory_; }

    bool in_strict_theory(LitId l) const { return strict_theory_.test(l); }

    /// Closure of `seeds` under the strict rules plus the selected instances.
    LitSet close_strict(const LitSet& seeds, const DeltaSet& support) const;
    /// Closure of `seeds` under the general rules plus the selected instances.
    /// Memoized per (seeds, support).
    LitSet close_general(const LitSet& seeds, const DeltaSet& support) const;

    bool derives(const DeltaSet& support, LitId goal) const;

    std::optional<Atom> contradiction() const;

private:
    std::vector<RuleId> selection(std::span<const RuleId> base, const DeltaSet& support) const;

    Specification source_;
    Specification ground_;
    Limits limits_;
    RuleBase base_;
    std::vector<RuleId> facts_;
    std::vector<RuleId> general_;
    std::vector<RuleId> strict_;
    std::vector<RuleId> defeasible_;
    LitSet strict_theory_;
    LitSet full_theory_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<LitSet, DeltaSet>, LitSet> general_memo_;
};

} // namespace dspec
