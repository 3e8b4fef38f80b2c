#pragma once

#include "dspec/corpus.hpp"
#include "dspec/program.hpp"
#include "dspec/textio.hpp"

#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace dspec::testing {

inline std::filesystem::path corpus_dir() { return DSPEC_CORPUS_DIR; }

inline std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
        if (e.path().extension() == ".dspec") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::unique_ptr<Program> load(const std::string& name, Limits limits = {}) {
    return std::make_unique<Program>(load_spec(corpus_dir() / (name + ".dspec")), limits);
}

inline std::unique_ptr<Program> program_of(const std::string& text, Limits limits = {}) {
    return std::make_unique<Program>(parse_spec(text), limits);
}

inline Literal lit(const std::string& text) { return parse_literal(text); }

inline std::vector<Literal> lits(std::initializer_list<const char*> texts) {
    std::vector<Literal> out;
    for (auto t : texts) out.push_back(parse_literal(t));
    return out;
}

/// Propositional specification over at most `atoms` atoms and `rules` rules.
inline Specification random_spec(std::mt19937_64& rng, std::size_t atoms = 6, std::size_t rules = 8) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto random_literal = [&] {
        Literal l = Literal::positive("p" + std::to_string(pick(atoms)));
        l.negated = pick(4) == 0;
        return l;
    };
    Specification spec;
    const std::size_t n = 1 + pick(rules);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t kind = pick(3);
        if (kind == 0) {
            spec.add(Rule::fact(random_literal()));
            continue;
        }
        std::vector<Literal> body;
        const std::size_t len = 1 + pick(3);
        for (std::size_t k = 0; k < len; ++k) body.push_back(random_literal());
        spec.add(kind == 1 ? Rule::strict(random_literal(), std::move(body))
                           : Rule::defeasible(random_literal(), std::move(body)));
    }
    return spec;
}

/// Ground rules of all three kinds over at most `atoms` atoms.
inline std::vector<Rule> random_ground_rules(std::mt19937_64& rng, std::size_t atoms = 6, std::size_t rules = 10) {
    const Specification s = random_spec(rng, atoms, rules);
    std::vector<Rule> out = s.strict();
    out.insert(out.end(), s.defeasible().begin(), s.defeasible().end());
    return out;
}

} // namespace dspec::testing
