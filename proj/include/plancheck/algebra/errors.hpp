#pragma once

#include <stdexcept>
#include <string>

namespace plancheck {

/// A denominator vanished at the evaluation point.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Division by an identically zero polynomial or rational function.
class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// A caller-supplied parameter is outside the documented range.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace plancheck
