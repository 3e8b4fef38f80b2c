#include "dspec/arguments.hpp"

#include "dspec/error.hpp"

#include <algorithm>
#include <cstdint>

namespace dspec {

namespace {

// Defeasible instances whose head lies in the backward dependency cone of goal.
std::vector<std::size_t> relevant_instances(const Program& p, LitId goal) {
    const auto& base = p.rules();
    LitSet cone = p.literals().empty_set();
    std::vector<LitId> todo{goal};
    cone.set(goal);
    while (!todo.empty()) {
        LitId l = todo.back();
        todo.pop_back();
        for (RuleId id = 0; id < base.rule_count(); ++id) {
            const auto& r = base.rule(id);
            if (r.head != l) continue;
            for (LitId b : r.body)
                if (!cone.test(b)) {
                    cone.set(b);
                    todo.push_back(b);
                }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.defeasible_count(); ++i)
        if (cone.test(base.rule(p.defeasible_rules()[i]).head)) out.push_back(i);
    return out;
}

// Calls f(mask) for every mask over n bits, by ascending popcount.
template <typename F>
void for_each_mask_by_size(std::size_t n, F&& f) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            f(std::uint64_t{0});
            continue;
        }
        std::uint64_t m = (std::uint64_t{1} << k) - 1;
        while (m < limit) {
            f(m);
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
}

DeltaSet to_delta(const Program& p, const std::vector<std::size_t>& instances, std::uint64_t mask) {
    DeltaSet out = p.empty_delta();
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (mask >> i & 1U) out.set(instances[i]);
    return out;
}

} // namespace

std::strong_ordering Argument::operator<=>(const Argument& other) const {
    if (auto c = conclusion <=> other.conclusion; c != 0) return c;
    if (auto c = support.size() <=> other.support.size(); c != 0) return c;
    return support <=> other.support;
}

Argument make_argument(const Program& program, std::vector<Rule> support, Literal conclusion) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const DeltaSet delta = program.delta_set(support);
    const auto goal = program.literals().find(conclusion);
    if (!goal || !program.derives(delta, *goal))
        throw NotAnArgumentError("the support does not derive " + to_string(conclusion) +
                                 " together with the strict rules");
    return {std::move(support), std::move(conclusion)};
}

std::vector<Argument> enumerate_arguments(const Program& program, const Literal& conclusion, bool minimal_only) {
    const auto goal = program.literals().find(conclusion);
    if (!goal || !program.full_theory().test(*goal)) return {};
    if (program.in_strict_theory(*goal) && minimal_only) return {{{}, conclusion}};

    const auto instances = minimal_only ? relevant_instances(program, *goal) : [&] {
        std::vector<std::size_t> all(program.defeasible_count());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }();
    if (instances.size() > program.limits().max_ground_defeasible)
        throw ResourceError("argument enumeration over " + std::to_string(instances.size()) +
                            " ground defeasible instances exceeds the cap of " +
                            std::to_string(program.limits().max_ground_defeasible));

    // Minimal supports first; every superset of one is an argument as well.
    std::vector<std::uint64_t> minimal;
    for_each_mask_by_size(instances.size(), [&](std::uint64_t m) {
        for (auto found : minimal)
            if ((m & found) == found) return;
        if (program.derives(to_delta(program, instances, m), *goal)) minimal.push_back(m);
    });

    std::vector<Argument> out;
    auto emit = [&](std::uint64_t m) {
        out.push_back({program.delta_rules(to_delta(program, instances, m)), conclusion});
    };
    if (minimal_only) {
        for (auto m : minimal) emit(m);
    } else {
        for_each_mask_by_size(instances.size(), [&](std::uint64_t m) {
            if (std::any_of(minimal.begin(), minimal.end(), [&](auto f) { return (m & f) == f; })) emit(m);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal(const Program& program, const Argument& arg) {
    const DeltaSet support = program.delta_set(arg.support);
    const LitId goal = program.literals().id(arg.conclusion);
    // Derivability is monotone in the support, so dropping single rules suffices.
    for (auto i = support.find_first(); i != DeltaSet::npos; i = support.find_next(i)) {
        DeltaSet smaller = support;
        smaller.reset(i);
        if (program.derives(smaller, goal)) return false;
    }
    return true;
}

std::vector<Argument> collect_arguments(const Program& program, bool minimal_only, std::size_t max_args) {
    std::vector<Argument> out;
    for (const auto& l : program.literals().to_literals(program.full_theory())) {
        auto args = enumerate_arguments(program, l, minimal_only);
        out.insert(out.end(), std::make_move_iterator(args.begin()), std::make_move_iterator(args.end()));
        if (out.size() > max_args)
            throw ResourceError("more than " + std::to_string(max_args) + " arguments (raise --max-args)");
    }
    return out;
}

std::vector<Argument> check_population(const Program& program, std::size_t max_args, std::size_t all_threshold) {
    try {
        return collect_arguments(program, false, std::min(all_threshold, max_args));
    } catch (const ResourceError&) {
        return collect_arguments(program, true, max_args);
    }
}

} // namespace dspec
