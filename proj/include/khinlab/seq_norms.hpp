#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "khinlab/exponent.hpp"

namespace khinlab {

/// |x|^p as exp(p·ln|x|), with 0^p = 0.
inline double abs_pow(double x, double p)
{
    const double a = std::abs(x);
    if (a == 0.0) {
        return 0.0;
    }
    return std::exp(p * std::log(a));
}

/// Dense row-major real matrix with finite entries.
class RealMatrix {
public:
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    RealMatrix(std::size_t rows, std::size_t cols); // zero-filled

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const
    {
        return {entries_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const double> entries() const { return entries_; }

    [[nodiscard]] RealMatrix transposed() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// (Σ|v_i|^p)^{1/p}; max|v_i| for p = ∞; 0 for an empty vector.
/// Exponents below 1 give the quasi-norm.
double lp_norm(std::span<const double> v, Exponent p);

/// (Σ_i (Σ_j |a_ij|^inner)^{outer/inner})^{1/outer}; rows carry the outer sum.
double mixed_norm(const RealMatrix& a, Exponent outer, Exponent inner);

/// Right side minus left side of the Minkowski mixed-norm inequality
///   (Σ_i (Σ_j |a_ij|^p)^{q/p})^{1/q} ≤ (Σ_j (Σ_i |a_ij|^q)^{p/q})^{1/p},
/// for 0 < p < q < ∞. Nonnegative up to rounding.
double minkowski_gap(const RealMatrix& a, double p, double q);

} // namespace khinlab
