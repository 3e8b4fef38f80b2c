#pragma once

// The four specificity relations between arguments and the checks built on
// them. leq(kind, a, b) reads "a is more or equivalently specific than b".

#include "dspec/activation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dspec {

enum class Relation { P1, P2, P3, CP };

inline constexpr std::array<Relation, 4> all_relations{Relation::P1, Relation::P2, Relation::P3, Relation::CP};

std::string_view relation_name(Relation r);              // "P1", ..., "CP"
std::optional<Relation> parse_relation(std::string_view s);  // case-insensitive

enum class Outcome {
    MoreSpecific,  // a < b
    LessSpecific,  // a > b
    Equivalent,    // a ~= b
    Incomparable,  // a ## b
};

Outcome outcome_from(bool forward, bool backward) noexcept;

struct LeqOptions {
    /// Quantify only over minimal activation sets of the left argument. The
    /// extension is the same either way; off means the literal all-H reading.
    bool minimal = true;
};

bool leq(const Program& program, Relation kind, const Argument& a1, const Argument& a2, const LeqOptions& opts = {});
Outcome compare(const Program& program, Relation kind, const Argument& a1, const Argument& a2,
                const LeqOptions& opts = {});

/// leq for every ordered pair of `args`; rows are evaluated concurrently.
class LeqMatrix {
public:
    LeqMatrix(const Program& program, Relation kind, std::span<const Argument> args, const LeqOptions& opts = {});

    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

enum class ConditionResult { Holds, Fails, Unknown };

std::string_view condition_result_name(ConditionResult r);

/// Sufficient conditions (1..4) for P3 being included in CP. Condition 1 is a
/// brute force over (H, A) pairs and yields Unknown past
/// Limits::max_condition_pairs or Limits::max_ground_defeasible.
ConditionResult check_theorem_condition(const Program& program, int n);

/// Condition 1 by brute force alone, without using the conditions implying it.
ConditionResult condition1_exhaustive(const Program& program);

struct Triple {
    std::size_t first, second, third;
};

/// First (a, b, c) in index order with a <= b, b <= c and not a <= c.
std::optional<Triple> find_transitivity_counterexample(const Program& program, Relation kind,
                                                       std::span<const Argument> args, const LeqOptions& opts = {});
std::optional<Triple> find_transitivity_counterexample(const LeqMatrix& m);

struct PairWitness {
    std::size_t first, second;
    Relation stronger, weaker;  // leq holds for `stronger` but not for `weaker`
};

/// P3 within P2 within P1 on all ordered pairs; the first violation otherwise.
std::optional<PairWitness> verify_subset_chain(const Program& program, std::span<const Argument> args,
                                               const LeqOptions& opts = {});

/// leq(P3) implies leq(CP) on all ordered pairs; the first violation otherwise.
std::optional<PairWitness> verify_p3_within_cp(const Program& program, std::span<const Argument> args,
                                               const LeqOptions& opts = {});

struct QuasiOrderReport {
    std::optional<std::size_t> irreflexive;        // index with not a <= a
    std::optional<Triple> intransitive;
    std::optional<std::vector<std::size_t>> strict_cycle;  // a0 < a1 < ... < a0
    std::size_t triples_checked = 0;

    bool ok() const { return !irreflexive && !intransitive && !strict_cycle; }
};

/// Reflexivity, transitivity and acyclicity of the strict part. Triples are
/// exhaustive up to `max_triples`, otherwise `max_triples` are sampled from
/// `seed`.
QuasiOrderReport check_quasi_order(const LeqMatrix& m, std::uint64_t seed = 0,
                                   std::size_t max_triples = 2'000'000);

/// Ordered pair whose leq value differs between the minimal-only and the
/// all-H quantification.
std::optional<std::pair<std::size_t, std::size_t>> verify_minimality_equivalence(const Program& program, Relation kind,
                                                                                  std::span<const Argument> args);

} // namespace dspec
