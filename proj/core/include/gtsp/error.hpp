#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtsp {

/// Invalid argument or instance data supplied by the caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed instance text. Carries the 1-based line number (0 when the
/// problem is not tied to a single line, e.g. a missing section).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The request exceeds a configured size limit (exact solvers).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad experiment configuration (missing reference optimum, unknown key, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric expression left its domain (e.g. a negative base in the
/// expected-utility power term).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace gtsp
