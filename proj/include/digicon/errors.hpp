#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace digicon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The requested search space exceeds the configured subset cap.
class BudgetExceeded : public Error {
public:
    /// `required_log2` is the exponent of the cap needed (the search space is 2^required_log2).
    BudgetExceeded(unsigned required_log2, std::uint64_t max_subsets);

    unsigned required_log2() const noexcept { return required_log2_; }
    std::uint64_t max_subsets() const noexcept { return max_subsets_; }

private:
    unsigned required_log2_;
    std::uint64_t max_subsets_;
};

/// An argument lies outside the domain of a map (e.g. a non-convex set handed to a bijection).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyOverlap : public Error {
public:
    using Error::Error;
};

/// A self-check inside a constructive algorithm failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace digicon
