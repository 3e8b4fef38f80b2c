#include "dspec/specificity.hpp"

#include "dspec/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <random>
#include <thread>

namespace dspec {

namespace {

// leq(kind, a1, .) for a fixed left argument; the activation sets of a1 are
// enumerated once and reused for every right argument.
class Row {
public:
    Row(const Program& p, Relation kind, const Argument& a1, const LeqOptions& opts)
        : p_(p)
        , kind_(kind)
        , a1_(resolve(p, a1))
        , opts_(opts) {}

    bool against(const ResolvedArgument& a2) {
        const bool l1_strict = p_.in_strict_theory(a1_.conclusion);
        const bool l2_strict = p_.in_strict_theory(a2.conclusion);
        if (kind_ == Relation::CP) {
            if (l1_strict) return true;
            if (l2_strict) return false;
            for (const auto& h : sets())
                if (!is_activation_set(p_, h, a2)) return false;
            return true;
        }
        if (kind_ == Relation::P3 && l2_strict && !l1_strict) return false;

        // H ranges over sets activating a1 but not the reference argument.
        if (kind_ == Relation::P1) {
            const ResolvedArgument reference{a2.support, a1_.conclusion};
            for (const auto& h : sets())
                if (!is_simplified_activation_set(p_, h, reference) && !is_simplified_activation_set(p_, h, a2))
                    return false;
            return true;
        }
        for (const auto& h : filtered())
            if (!is_simplified_activation_set(p_, h, a2)) return false;
        return true;
    }

private:
    const std::vector<LitSet>& sets() {
        if (!sets_) {
            const bool cp = kind_ == Relation::CP;
            sets_ = activation_sets(p_, a1_, cp ? Domain::Strict : Domain::DefeasibleClosure, !cp, opts_.minimal);
        }
        return *sets_;
    }

    // Sets activating a1 but not <{}, L1>; used by P2 and P3.
    const std::vector<LitSet>& filtered() {
        if (!filtered_) {
            const ResolvedArgument reference{p_.empty_delta(), a1_.conclusion};
            filtered_.emplace();
            for (const auto& h : sets())
                if (!is_simplified_activation_set(p_, h, reference)) filtered_->push_back(h);
        }
        return *filtered_;
    }

    const Program& p_;
    Relation kind_;
    ResolvedArgument a1_;
    LeqOptions opts_;
    std::optional<std::vector<LitSet>> sets_;
    std::optional<std::vector<LitSet>> filtered_;
};

void require_argument(const Program& p, const Argument& a) {
    if (!p.derives(p.delta_set(a.support), p.literals().id(a.conclusion)))
        throw NotAnArgumentError("'" + to_string(a.conclusion) + "' does not follow from its support");
}

// Ground strict rules split by the number of distinct body literals.
struct StrictSplit {
    std::vector<RuleId> small;  // facts and general rules with at most one body literal
    std::vector<RuleId> large;  // general rules with two or more body literals
};

StrictSplit split_strict(const Program& p) {
    StrictSplit out;
    for (RuleId id : p.strict_rules())
        (p.rules().rule(id).body.size() >= 2 ? out.large : out.small).push_back(id);
    return out;
}

bool condition4(const StrictSplit& s) { return s.large.empty(); }

bool condition3(const Program& p, const StrictSplit& s) {
    for (RuleId id : s.large)
        for (LitId b : p.rules().rule(id).body)
            if (p.in_strict_theory(b)) return false;
    return true;
}

bool condition2(const Program& p, const StrictSplit& s) {
    const LitSet small_theory = p.rules().close(p.literals().empty_set(), s.small);
    for (RuleId id : s.large) {
        const auto& r = p.rules().rule(id);
        if (small_theory.test(r.head)) continue;
        for (LitId b : r.body)
            if (small_theory.test(b)) return false;
    }
    return true;
}

ConditionResult condition1(const Program& p) {
    const auto& limits = p.limits();
    std::vector<LitId> strict_lits;
    for_each_bit(p.strict_theory(), [&](LitId l) { strict_lits.push_back(l); });
    const std::size_t m = p.defeasible_count();
    const std::size_t n = strict_lits.size();
    if (m > limits.max_ground_defeasible || n + m >= 63) return ConditionResult::Unknown;
    const std::uint64_t pairs = std::uint64_t{1} << (n + m);
    if (pairs > limits.max_condition_pairs) return ConditionResult::Unknown;

    const auto& base = p.rules();
    std::vector<RuleId> general(p.general_rules().begin(), p.general_rules().end());
    std::vector<RuleId> strict(p.strict_rules().begin(), p.strict_rules().end());
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
        std::vector<RuleId> selected = general;
        for (std::size_t i = 0; i < m; ++i)
            if (a >> i & 1U) selected.push_back(p.defeasible_rules()[i]);
        for (std::uint64_t hm = 0; hm < (std::uint64_t{1} << n); ++hm) {
            LitSet h = p.literals().empty_set();
            for (std::size_t i = 0; i < n; ++i)
                if (hm >> i & 1U) h.set(strict_lits[i]);
            const LitSet lset = base.close(h, selected);
            const LitSet closed = base.close(lset, strict);
            if (!closed.is_subset_of(lset | p.strict_theory())) return ConditionResult::Fails;
        }
    }
    return ConditionResult::Holds;
}

} // namespace

std::string_view relation_name(Relation r) {
    switch (r) {
    case Relation::P1: return "P1";
    case Relation::P2: return "P2";
    case Relation::P3: return "P3";
    case Relation::CP: return "CP";
    }
    return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (Relation r : all_relations) {
        std::string name(relation_name(r));
        for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (name == lower) return r;
    }
    return std::nullopt;
}

Outcome outcome_from(bool forward, bool backward) noexcept {
    if (forward && backward) return Outcome::Equivalent;
    if (forward) return Outcome::MoreSpecific;
    if (backward) return Outcome::LessSpecific;
    return Outcome::Incomparable;
}

bool leq(const Program& program, Relation kind, const Argument& a1, const Argument& a2, const LeqOptions& opts) {
    require_argument(program, a1);
    require_argument(program, a2);
    Row row(program, kind, a1, opts);
    return row.against(resolve(program, a2));
}

Outcome compare(const Program& program, Relation kind, const Argument& a1, const Argument& a2,
                const LeqOptions& opts) {
    return outcome_from(leq(program, kind, a1, a2, opts), leq(program, kind, a2, a1, opts));
}

LeqMatrix::LeqMatrix(const Program& program, Relation kind, std::span<const Argument> args, const LeqOptions& opts)
    : n_(args.size())
    , cells_(n_ * n_, 0) {
    std::vector<ResolvedArgument> resolved;
    resolved.reserve(n_);
    for (const auto& a : args) {
        require_argument(program, a);
        resolved.push_back(resolve(program, a));
    }

    auto run_rows = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < n_; i += step) {
            Row row(program, kind, args[i], opts);
            for (std::size_t j = 0; j < n_; ++j) cells_[i * n_ + j] = row.against(resolved[j]) ? 1 : 0;
        }
    };

    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), n_ / 4 + 1);
    if (workers <= 1) {
        run_rows(0, 1);
        return;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run_rows, w, workers));
    for (auto& j : jobs) j.get();
}

std::string_view condition_result_name(ConditionResult r) {
    switch (r) {
    case ConditionResult::Holds: return "holds";
    case ConditionResult::Fails: return "fails";
    case ConditionResult::Unknown: return "unknown";
    }
    return "?";
}

ConditionResult check_theorem_condition(const Program& program, int n) {
    if (n < 1 || n > 4) throw Error("condition number must be between 1 and 4");
    const StrictSplit split = split_strict(program);
    auto verdict = [](bool b) { return b ? ConditionResult::Holds : ConditionResult::Fails; };
    switch (n) {
    case 4: return verdict(condition4(split));
    case 3: return verdict(condition4(split) || condition3(program, split));
    case 2: return verdict(condition4(split) || condition3(program, split) || condition2(program, split));
    default:
        if (condition4(split) || condition3(program, split) || condition2(program, split))
            return ConditionResult::Holds;
        return condition1(program);
    }
}

ConditionResult condition1_exhaustive(const Program& program) { return condition1(program); }

std::optional<Triple> find_transitivity_counterexample(const LeqMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!m(a, b)) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (m(b, c) && !m(a, c)) return Triple{a, b, c};
        }
    return std::nullopt;
}

std::optional<Triple> find_transitivity_counterexample(const Program& program, Relation kind,
                                                       std::span<const Argument> args, const LeqOptions& opts) {
    return find_transitivity_counterexample(LeqMatrix(program, kind, args, opts));
}

namespace {

std::optional<PairWitness> first_inclusion_failure(const LeqMatrix& stronger, Relation s, const LeqMatrix& weaker,
                                                   Relation w) {
    for (std::size_t i = 0; i < stronger.size(); ++i)
        for (std::size_t j = 0; j < stronger.size(); ++j)
            if (stronger(i, j) && !weaker(i, j)) return PairWitness{i, j, s, w};
    return std::nullopt;
}

} // namespace

std::optional<PairWitness> verify_subset_chain(const Program& program, std::span<const Argument> args,
                                               const LeqOptions& opts) {
    const LeqMatrix p1(program, Relation::P1, args, opts);
    const LeqMatrix p2(program, Relation::P2, args, opts);
    const LeqMatrix p3(program, Relation::P3, args, opts);
    if (auto w = first_inclusion_failure(p3, Relation::P3, p2, Relation::P2)) return w;
    return first_inclusion_failure(p2, Relation::P2, p1, Relation::P1);
}

std::optional<PairWitness> verify_p3_within_cp(const Program& program, std::span<const Argument> args,
                                               const LeqOptions& opts) {
    const LeqMatrix p3(program, Relation::P3, args, opts);
    const LeqMatrix cp(program, Relation::CP, args, opts);
    return first_inclusion_failure(p3, Relation::P3, cp, Relation::CP);
}

QuasiOrderReport check_quasi_order(const LeqMatrix& m, std::uint64_t seed, std::size_t max_triples) {
    QuasiOrderReport report;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!m(i, i)) {
            report.irreflexive = i;
            break;
        }

    const bool exhaustive = n == 0 || n * n * n <= max_triples;
    if (exhaustive) {
        report.intransitive = find_transitivity_counterexample(m);
        report.triples_checked = n * n * n;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t t = 0; t < max_triples; ++t) {
            const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
            ++report.triples_checked;
            if (m(a, b) && m(b, c) && !m(a, c)) {
                report.intransitive = Triple{a, b, c};
                break;
            }
        }
    }

    // Cycle search in the strict part a < b (a <= b and not b <= a).
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::size_t> stack;
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        state[v] = 1;
        stack.push_back(v);
        for (std::size_t w = 0; w < n; ++w) {
            if (!(m(v, w) && !m(w, v))) continue;
            if (state[w] == 1) {
                auto from = std::find(stack.begin(), stack.end(), w);
                report.strict_cycle = std::vector<std::size_t>(from, stack.end());
                return true;
            }
            if (state[w] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        state[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < n && !report.strict_cycle; ++v)
        if (state[v] == 0) dfs(v);
    return report;
}

std::optional<std::pair<std::size_t, std::size_t>> verify_minimality_equivalence(const Program& program, Relation kind,
                                                                                  std::span<const Argument> args) {
    const LeqMatrix minimal(program, kind, args, LeqOptions{true});
    const LeqMatrix all(program, kind, args, LeqOptions{false});
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = 0; j < args.size(); ++j)
            if (minimal(i, j) != all(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace dspec
