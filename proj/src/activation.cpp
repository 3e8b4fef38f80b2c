#include "dspec/activation.hpp"

#include "dspec/error.hpp"

#include <cstdint>

namespace dspec {

ResolvedArgument resolve(const Program& program, const Argument& arg) {
    return {program.delta_set(arg.support), program.literals().id(arg.conclusion)};
}

bool is_simplified_activation_set(const Program& program, const LitSet& h, const ResolvedArgument& arg) {
    return program.close_general(h, arg.support).test(arg.conclusion);
}

bool is_activation_set(const Program& program, const LitSet& h, const ResolvedArgument& arg) {
    // Taking the whole phase-two closure as the intermediate set is enough:
    // closure under the strict rules is monotone.
    const LitSet intermediate = program.close_general(h, arg.support);
    if (intermediate.test(arg.conclusion)) return true;
    return program.close_strict(intermediate, program.empty_delta()).test(arg.conclusion);
}

bool is_simplified_activation_set(const Program& program, const std::vector<Literal>& h, const Argument& arg) {
    return is_simplified_activation_set(program, program.literals().to_set(h), resolve(program, arg));
}

bool is_activation_set(const Program& program, const std::vector<Literal>& h, const Argument& arg) {
    return is_activation_set(program, program.literals().to_set(h), resolve(program, arg));
}

const LitSet& domain_of(const Program& program, Domain domain) {
    return domain == Domain::Strict ? program.strict_theory() : program.full_theory();
}

std::vector<LitSet> activation_sets(const Program& program, const ResolvedArgument& arg, Domain domain,
                                    bool simplified, bool minimal) {
    std::vector<LitId> universe;
    for_each_bit(domain_of(program, domain), [&](LitId l) { universe.push_back(l); });
    const std::size_t n = universe.size();
    if (n > program.limits().max_domain)
        throw ResourceError("activation-set domain of " + std::to_string(n) + " literals exceeds the cap of " +
                            std::to_string(program.limits().max_domain));

    auto to_set = [&](std::uint64_t mask) {
        LitSet h = program.literals().empty_set();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) h.set(universe[i]);
        return h;
    };
    auto activates = [&](const LitSet& h) {
        return simplified ? is_simplified_activation_set(program, h, arg) : is_activation_set(program, h, arg);
    };

    std::vector<std::uint64_t> found;
    std::vector<LitSet> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t m = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
        while (m < limit) {
            bool skip = false;
            if (minimal)
                for (auto f : found)
                    if ((m & f) == f) {
                        skip = true;
                        break;
                    }
            if (!skip) {
                LitSet h = to_set(m);
                if (activates(h)) {
                    found.push_back(m);
                    out.push_back(std::move(h));
                }
            }
            if (m == 0) break;
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return out;
}

std::vector<std::vector<Literal>> minimal_activation_sets(const Program& program, const ActivationQuery& query) {
    const auto sets = activation_sets(program, resolve(program, query.argument), query.domain, query.simplified,
                                      query.minimal);
    std::vector<std::vector<Literal>> out;
    out.reserve(sets.size());
    for (const auto& h : sets) out.push_back(program.literals().to_literals(h));
    return out;
}

} // namespace dspec
