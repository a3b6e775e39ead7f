#include "khinlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "khinlab/errors.hpp"
#include "khinlab/summation.hpp"

namespace khinlab {

namespace {

std::size_t checked_size(const std::vector<std::size_t>& shape)
{
    if (shape.empty()) {
        throw ShapeMismatch("tensor order must be at least 1");
    }
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) {
            throw ShapeMismatch("tensor dimensions must be positive");
        }
        n *= d;
    }
    return n;
}

} // namespace

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> shape, std::vector<double> entries)
    : shape_(std::move(shape)), entries_(std::move(entries))
{
    const std::size_t n = checked_size(shape_);
    if (entries_.size() != n) {
        throw ShapeMismatch("tensor has " + std::to_string(entries_.size()) + " entries, shape requires " +
                            std::to_string(n));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); })) {
        throw DomainError("tensor entries must be finite");
    }
    strides_.assign(shape_.size(), 1);
    for (std::size_t k = shape_.size() - 1; k > 0; --k) {
        strides_[k - 1] = strides_[k] * shape_[k];
    }
}

CoefficientTensor CoefficientTensor::zeros(std::vector<std::size_t> shape)
{
    const std::size_t n = checked_size(shape);
    return CoefficientTensor(std::move(shape), std::vector<double>(n, 0.0));
}

CoefficientTensor CoefficientTensor::outer_product(const std::vector<std::vector<double>>& factors)
{
    std::vector<std::size_t> shape;
    shape.reserve(factors.size());
    for (const auto& f : factors) {
        shape.push_back(f.size());
    }
    std::vector<double> entries(checked_size(shape));
    std::vector<std::size_t> idx(shape.size(), 0);
    for (double& e : entries) {
        double v = 1.0;
        for (std::size_t k = 0; k < shape.size(); ++k) {
            v *= factors[k][idx[k]];
        }
        e = v;
        for (std::size_t k = shape.size(); k-- > 0;) {
            if (++idx[k] < shape[k]) {
                break;
            }
            idx[k] = 0;
        }
    }
    return CoefficientTensor(std::move(shape), std::move(entries));
}

std::size_t CoefficientTensor::sign_bits() const
{
    return std::accumulate(shape_.begin(), shape_.end(), std::size_t{0});
}

double CoefficientTensor::at(std::span<const std::size_t> index) const
{
    if (index.size() != shape_.size()) {
        throw ShapeMismatch("index order does not match tensor order");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] >= shape_[k]) {
            throw ShapeMismatch("index out of range on axis " + std::to_string(k));
        }
        flat += index[k] * strides_[k];
    }
    return entries_[flat];
}

bool CoefficientTensor::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](double x) { return x == 0.0; });
}

SignAssignment::SignAssignment(std::vector<std::vector<std::int8_t>> signs) : signs_(std::move(signs))
{
    for (const auto& axis : signs_) {
        for (std::int8_t s : axis) {
            if (s != 1 && s != -1) {
                throw DomainError("sign entries must be exactly +1 or -1");
            }
        }
    }
}

SignAssignment SignAssignment::all_positive(const std::vector<std::size_t>& shape)
{
    std::vector<std::vector<std::int8_t>> signs;
    signs.reserve(shape.size());
    for (std::size_t n : shape) {
        signs.emplace_back(n, std::int8_t{1});
    }
    return SignAssignment(std::move(signs));
}

CoefficientTensor sign_transform(const CoefficientTensor& y, const SignAssignment& s)
{
    const auto& shape = y.shape();
    if (s.order() != shape.size()) {
        throw ShapeMismatch("sign assignment order does not match tensor order");
    }
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (s.axis(k).size() != shape[k]) {
            throw ShapeMismatch("sign vector length does not match axis " + std::to_string(k));
        }
    }
    std::vector<double> out(y.entries().begin(), y.entries().end());
    std::vector<std::size_t> idx(shape.size(), 0);
    for (double& e : out) {
        int sign = 1;
        for (std::size_t k = 0; k < shape.size(); ++k) {
            sign *= s.axis(k)[idx[k]];
        }
        if (sign < 0) {
            e = -e;
        }
        for (std::size_t k = shape.size(); k-- > 0;) {
            if (++idx[k] < shape[k]) {
                break;
            }
            idx[k] = 0;
        }
    }
    return CoefficientTensor(shape, std::move(out));
}

double l2_of_tensor(const CoefficientTensor& y)
{
    CompensatedSum acc;
    for (double x : y.entries()) {
        acc.add(x * x);
    }
    return std::sqrt(acc.value());
}

} // namespace khinlab
