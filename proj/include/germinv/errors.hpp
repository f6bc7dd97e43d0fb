#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial expression or germ file. `position()` is a 0-based
/// character offset into the offending text.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownVariable, NegativeExponent, Format };

    ParseError(Kind kind, const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), kind_(kind), position_(position) {}
    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

/// An operation was called outside its domain (wrong arity, zero input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not. Always a bug or a violated hypothesis.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace germinv
