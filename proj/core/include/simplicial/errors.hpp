#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simplicial {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// A parameter is outside the range its definition allows.
class ArgumentError : public Error
{
public:
    using Error::Error;
    const char* kind() const noexcept override { return "argument_error"; }
};

/// Malformed complex text. `line()` is 1-based.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what)
        , m_line(line)
    {}
    std::size_t line() const noexcept { return m_line; }
    const char* kind() const noexcept override { return "parse_error"; }

private:
    std::size_t m_line;
};

class EmptyComplexError : public Error
{
public:
    EmptyComplexError()
        : Error("the complex has no simplices")
    {}
    const char* kind() const noexcept override { return "empty_complex"; }
};

/// A simplex was used with a complex that does not contain it.
class MembershipError : public Error
{
public:
    using Error::Error;
    const char* kind() const noexcept override { return "membership_error"; }
};

/// A normalisation constant or average is not defined (zero denominator, singleton set).
class UndefinedResultError : public Error
{
public:
    using Error::Error;
    const char* kind() const noexcept override { return "undefined_result"; }
};

/// The brute-force layer refused an input above its size limits.
class GuardRefusal : public Error
{
public:
    using Error::Error;
    const char* kind() const noexcept override { return "guard_refusal"; }
};

} // namespace simplicial
