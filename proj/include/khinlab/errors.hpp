#pragma once

#include <stdexcept>
#include <string>

namespace khinlab {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an exhaustive enumeration would exceed the configured bit budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ShapeMismatch : public std::invalid_argument {
public:
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A ratio or report is requested for an identically-zero input.
class DegenerateInput : public DomainError {
public:
    explicit DegenerateInput(const std::string& what) : DomainError(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace khinlab
