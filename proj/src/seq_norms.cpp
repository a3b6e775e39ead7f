#include "khinlab/seq_norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "khinlab/summation.hpp"

namespace khinlab {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeMismatch("matrix must have at least one row and one column");
    }
    if (entries_.size() != rows_ * cols_) {
        throw ShapeMismatch("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                            std::to_string(rows_ * cols_));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); })) {
        throw DomainError("matrix entries must be finite");
    }
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : RealMatrix(rows, cols, std::vector<double>(rows * cols, 0.0))
{
}

RealMatrix RealMatrix::transposed() const
{
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

double lp_norm(std::span<const double> v, Exponent p)
{
    if (p.is_infinite()) {
        double m = 0.0;
        for (double x : v) {
            m = std::max(m, std::abs(x));
        }
        return m;
    }
    CompensatedSum acc;
    for (double x : v) {
        acc.add(abs_pow(x, p.value()));
    }
    const double s = acc.value();
    return s == 0.0 ? 0.0 : std::exp(std::log(s) / p.value());
}

double mixed_norm(const RealMatrix& a, Exponent outer, Exponent inner)
{
    std::vector<double> row_norms(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        row_norms[i] = lp_norm(a.row(i), inner);
    }
    return lp_norm(row_norms, outer);
}

double minkowski_gap(const RealMatrix& a, double p, double q)
{
    if (!(p > 0.0 && p < q && std::isfinite(q))) {
        throw DomainError("minkowski_gap requires 0 < p < q < inf");
    }
    const double lhs = mixed_norm(a, q, p);
    const double rhs = mixed_norm(a.transposed(), p, q);
    return rhs - lhs;
}

} // namespace khinlab
