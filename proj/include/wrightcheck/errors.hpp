#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wrightcheck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tabulated function was queried outside its table.
class UntabulatedPoint : public Error {
public:
    using Error::Error;
};

/// A closure increment has no strictly positive coordinate.
class NonTerminatingJ : public Error {
public:
    using Error::Error;
};

/// An increment is zero, has a negative coordinate, or uses a symbol not declared positive.
class InvalidIncrement : public Error {
public:
    using Error::Error;
};

/// The sign of a point with mixed-sign or undeclared-sign coordinates was requested.
class SignUndecidable : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

class EvenOrder : public Error {
public:
    using Error::Error;
};

class UnknownCandidate : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace wrightcheck
