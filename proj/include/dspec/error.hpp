#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what)
        , line_(line)
        , column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A predicate symbol used with two different arities.
class ArityError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A rule with variables cannot be instantiated (empty Herbrand universe).
class GroundingError : public Error {
public:
    using Error::Error;
};

/// The support of a candidate argument does not derive its conclusion.
class NotAnArgumentError : public Error {
public:
    using Error::Error;
};

/// A support rule is not a ground instance of any defeasible rule.
class ForeignRuleError : public NotAnArgumentError {
public:
    using NotAnArgumentError::NotAnArgumentError;
};

/// An exhaustive search would exceed a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace dspec
