#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace khinlab {

/// m-dimensional real array y_{i1...im}, stored row-major (last index fastest).
class CoefficientTensor {
public:
    CoefficientTensor(std::vector<std::size_t> shape, std::vector<double> entries);

    static CoefficientTensor zeros(std::vector<std::size_t> shape);
    /// u1 ⊗ u2 ⊗ ... ⊗ um.
    static CoefficientTensor outer_product(const std::vector<std::vector<double>>& factors);

    [[nodiscard]] std::size_t order() const { return shape_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& shape() const { return shape_; }
    [[nodiscard]] const std::vector<std::size_t>& strides() const { return strides_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::span<const double> entries() const { return entries_; }
    [[nodiscard]] std::span<double> mutable_entries() { return entries_; }

    /// Σ N_j, the number of sign bits needed to enumerate every axis.
    [[nodiscard]] std::size_t sign_bits() const;

    double operator[](std::size_t flat) const { return entries_[flat]; }
    [[nodiscard]] double at(std::span<const std::size_t> index) const;

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const CoefficientTensor&, const CoefficientTensor&) = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> strides_;
    std::vector<double> entries_;
};

/// One ±1 vector per tensor axis.
class SignAssignment {
public:
    explicit SignAssignment(std::vector<std::vector<std::int8_t>> signs);

    static SignAssignment all_positive(const std::vector<std::size_t>& shape);

    [[nodiscard]] std::size_t order() const { return signs_.size(); }
    [[nodiscard]] const std::vector<std::int8_t>& axis(std::size_t k) const { return signs_[k]; }

private:
    std::vector<std::vector<std::int8_t>> signs_;
};

/// Entry (i1...im) multiplied by ε^{(1)}_{i1}···ε^{(m)}_{im}.
CoefficientTensor sign_transform(const CoefficientTensor& y, const SignAssignment& s);

/// Square root of the sum of squared entries.
double l2_of_tensor(const CoefficientTensor& y);

} // namespace khinlab
