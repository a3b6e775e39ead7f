#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "khinlab/errors.hpp"

namespace khinlab {

/// An exponent in (0, ∞], with infinity as a first-class value.
///
/// Conversion from double is implicit so that call sites can write
/// `haagerup_constant(1.5)`; a non-positive or NaN value throws DomainError.
class Exponent {
public:
    Exponent(double value) : value_(value) // NOLINT(google-explicit-constructor)
    {
        if (!(value > 0.0)) {
            throw DomainError("exponent must be positive, got " + std::to_string(value));
        }
    }

    static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

    [[nodiscard]] bool is_infinite() const { return std::isinf(value_); }

    /// The numeric value; +inf for the infinite exponent.
    [[nodiscard]] double value() const { return value_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }
    friend auto operator<=>(Exponent a, Exponent b) { return a.value_ <=> b.value_; }

private:
    double value_;
};

/// p/(p-1) for 1 < p < ∞, ∞ for p = 1 and 1 for p = ∞.
Exponent conjugate_exponent(Exponent p);

/// Parses "inf", "infinity" or a positive decimal.
Exponent parse_exponent(const std::string& text);

} // namespace khinlab
