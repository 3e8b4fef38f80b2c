#pragma once

// The ".dspec" text format.
//
//   % comment to end of line
//   name example1.
//   fact bird(tweety).
//   strict bird(X) <- emu(X).
//   defeasible flies(X) <~ bird(X).
//
// Statements end with '.', may span lines and may share a line. Identifiers
// starting with an uppercase letter or '_' are variables. "~" is classical
// negation; "¬" and "⟸" are accepted for "~" and "<-". Arguments are written
// "<{r1; r2}, conclusion>" or "<{}, conclusion>".

#include "dspec/arguments.hpp"
#include "dspec/specificity.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dspec {

struct SourceLocation {
    std::size_t line = 0;
    std::size_t column = 0;

    bool operator==(const SourceLocation&) const = default;
};

struct Declaration {
    Rule rule;
    SourceLocation location;
};

struct SpecDocument {
    std::string name;                       // empty when the text has no name statement
    std::vector<Declaration> declarations;  // in source order

    Specification specification() const;
};

/// Throws ParseError (with line and column) or ArityError.
SpecDocument parse_document(std::string_view text);
Specification parse_spec(std::string_view text);

/// Canonical text: name, then facts, general rules and defeasible rules, one
/// statement per line.
std::string render_spec(const Specification& spec, const std::string& name = {});
std::string render_document(const SpecDocument& doc);

Literal parse_literal(std::string_view text);
/// A single rule in statement-free form: "h", "h <- b1, b2" or "h <~ b1".
Rule parse_rule(std::string_view text);

/// Parses and validates with make_argument.
Argument parse_argument(std::string_view text, const Program& program);
/// Syntax only; no validation against a program.
Argument parse_argument_syntax(std::string_view text);
std::string render_argument(const Argument& arg);

std::string_view render_outcome(Outcome o);  // "<", ">", "~=", "##"
std::string_view outcome_word(Outcome o);    // "more specific", ..., "incomparable"
/// Accepts either the symbol or the word.
std::optional<Outcome> parse_outcome(std::string_view s);

} // namespace dspec
