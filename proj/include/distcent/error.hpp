#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distcent {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument or configuration violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed edge-list input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A computation produced a non-finite value or hit a singular system.
class NumericError : public Error {
public:
    using Error::Error;
};

/// An iterative method ran out of iterations.
class NotConverged : public Error {
public:
    NotConverged(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A statistic is mathematically undefined for the given input (e.g. zero rank variance).
class Undefined : public Error {
public:
    using Error::Error;
};

}  // namespace distcent
