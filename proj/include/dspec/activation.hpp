#pragma once

// Activation sets. H simplified-activates <A, L> when L follows from H, A and
// the general rules alone. H activates <A, L> when L follows from the strict
// rules (facts included) applied to what H, A and the general rules derive.

#include "dspec/arguments.hpp"

#include <vector>

namespace dspec {

enum class Domain {
    Strict,              // subsets of T_Pi
    DefeasibleClosure,   // subsets of T_{Pi u Delta}
};

struct ActivationQuery {
    Argument argument;
    Domain domain = Domain::Strict;
    bool simplified = false;
    bool minimal = true;
};

/// An argument resolved against a program's tables. The support need not
/// derive the conclusion (reference arguments such as <{}, L> are allowed).
struct ResolvedArgument {
    DeltaSet support;
    LitId conclusion;
};

ResolvedArgument resolve(const Program& program, const Argument& arg);

bool is_simplified_activation_set(const Program& program, const LitSet& h, const ResolvedArgument& arg);
bool is_activation_set(const Program& program, const LitSet& h, const ResolvedArgument& arg);

bool is_simplified_activation_set(const Program& program, const std::vector<Literal>& h, const Argument& arg);
bool is_activation_set(const Program& program, const std::vector<Literal>& h, const Argument& arg);

const LitSet& domain_of(const Program& program, Domain domain);

/// The (minimal, if requested) activation sets inside the query domain, by
/// ascending size then canonical order. Throws ResourceError past
/// Limits::max_domain.
std::vector<LitSet> activation_sets(const Program& program, const ResolvedArgument& arg, Domain domain,
                                    bool simplified, bool minimal);

std::vector<std::vector<Literal>> minimal_activation_sets(const Program& program, const ActivationQuery& query);

} // namespace dspec
