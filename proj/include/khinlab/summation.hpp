#pragma once

#include <cmath>
#include <span>

namespace khinlab {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    void add(const CompensatedSum& other)
    {
        add(other.sum_);
        add(other.comp_);
    }

    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Double-double accumulator built on TwoSum. Sums of a few thousand doubles
/// of comparable magnitude are represented exactly, so signed sums that
/// cancel in exact arithmetic come out as exactly zero.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    void add(double x)
    {
        const double s = hi + x;
        const double bp = s - hi;
        const double err = (hi - (s - bp)) + (x - bp);
        hi = s;
        lo += err;
        renormalize();
    }

    void add(const DoubleDouble& other)
    {
        add(other.hi);
        add(other.lo);
    }

    void scale(double factor)
    {
        // Only used with powers of two, which scale exactly.
        hi *= factor;
        lo *= factor;
    }

    [[nodiscard]] double value() const { return hi + lo; }

private:
    void renormalize()
    {
        const double s = hi + lo;
        lo = lo - (s - hi);
        hi = s;
    }
};

inline double compensated_sum(std::span<const double> xs)
{
    CompensatedSum acc;
    for (double x : xs) {
        acc.add(x);
    }
    return acc.value();
}

} // namespace khinlab
