#pragma once

#include <stdexcept>
#include <string>

namespace eqx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range item, ragged matrix, bad epsilon.
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed document. `where()` is a JSON pointer or byte offset.
class ParseError : public InputError {
public:
    ParseError(std::string where, const std::string& what)
        : InputError(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// An algorithm was called on an instance outside its precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Fixed-width integer overflow.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Enumeration or state budget exhausted.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A proof-level invariant failed during execution. Indicates a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace eqx
