#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linperiod {

// Two series of different truncation orders were combined.
class OrderMismatch : public std::logic_error {
public:
    OrderMismatch(std::size_t lhs, std::size_t rhs);
};

// Series inversion was asked for a series with zero constant term.
class NotAUnit : public std::domain_error {
public:
    NotAUnit() : std::domain_error("series has zero constant term and is not a unit") {}
};

// A ratio of alternants was requested with repeated variables.
class SingularDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text input. line() is 1-based, or 0 when not tied to a file line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a data invariant.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace linperiod
