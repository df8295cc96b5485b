#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gkres/exponent.hpp>

namespace gkres
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input. CLI exit code 2.
class InputError : public Error
{
public:
    using Error::Error;
};

class ParseError : public InputError
{
public:
    ParseError(const std::string &msg, std::size_t line = 0, std::size_t column = 0)
        : InputError(line == 0 ? msg : msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DimensionMismatch : public InputError
{
public:
    using InputError::InputError;
};

class UnknownVariable : public InputError
{
public:
    using InputError::InputError;
};

class ZeroPolynomial : public InputError
{
public:
    using InputError::InputError;
};

// Exact int64 exponent arithmetic left the representable range.
class OverflowError : public InputError
{
public:
    using InputError::InputError;
};

// A mathematical precondition of an operation does not hold. CLI exit code 1.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

class DegenerateSum : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class NotGeneric : public PreconditionError
{
public:
    explicit NotGeneric(const std::string &msg, std::optional<ExponentVector> witness = std::nullopt)
        : PreconditionError(msg), witness_(std::move(witness))
    {
    }
    const std::optional<ExponentVector> &witness() const noexcept { return witness_; }

private:
    std::optional<ExponentVector> witness_;
};

class NotCritical : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

// Some summand polytope is a point, so no complete admissible flag reaches the sum.
class NoFlags : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class NotVertex : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

class NotPointed : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

// A result violated an identity that must hold (non-integral solution count and
// the like). Signals a bug rather than bad input.
class ConsistencyError : public Error
{
public:
    using Error::Error;
};

} // namespace gkres
