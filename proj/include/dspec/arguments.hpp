#pragma once

#include "dspec/program.hpp"

#include <compare>
#include <vector>

namespace dspec {

/// <support, conclusion>: ground defeasible instances that, together with the
/// strict rules, derive the conclusion. Support is kept sorted.
struct Argument {
    std::vector<Rule> support;
    Literal conclusion;

    /// Canonical order: conclusion, then support size, then support.
    std::strong_ordering operator<=>(const Argument& other) const;
    bool operator==(const Argument&) const = default;
};

/// Validates and returns the argument; neither minimality nor consistency of
/// the support is required. Throws ForeignRuleError or NotAnArgumentError.
Argument make_argument(const Program& program, std::vector<Rule> support, Literal conclusion);

/// Every support set (ascending cardinality) deriving `conclusion`, or only the
/// subset-minimal ones. Throws ResourceError past Limits::max_ground_defeasible.
std::vector<Argument> enumerate_arguments(const Program& program, const Literal& conclusion, bool minimal_only);

bool is_minimal(const Program& program, const Argument& arg);

/// Arguments for every literal of T_{Pi u Delta}, in canonical order. Throws
/// ResourceError when more than `max_args` would be returned.
std::vector<Argument> collect_arguments(const Program& program, bool minimal_only, std::size_t max_args);

/// The population used by whole-program checks: every argument when there are
/// at most `all_threshold` of them, the minimal ones otherwise (capped by
/// `max_args`).
std::vector<Argument> check_population(const Program& program, std::size_t max_args,
                                       std::size_t all_threshold = 48);

} // namespace dspec
