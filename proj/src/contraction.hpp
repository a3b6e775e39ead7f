#pragma once

// Signed contractions of a dense row-major block against one ±1 vector per
// axis. Shared by the moment and form-norm enumeration kernels.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "khinlab/summation.hpp"

namespace khinlab::detail {

class SignedContractor {
public:
    explicit SignedContractor(std::vector<std::size_t> shape);

    [[nodiscard]] std::size_t order() const { return shape_.size(); }
    [[nodiscard]] std::size_t positions() const { return signs_.size(); }
    [[nodiscard]] std::size_t block_size() const { return block_size_; }
    [[nodiscard]] std::size_t axis_of(std::size_t pos) const { return axis_of_[pos]; }
    [[nodiscard]] std::size_t index_of(std::size_t pos) const { return pos - offsets_[axis_of_[pos]]; }
    [[nodiscard]] double sign_at(std::size_t pos) const { return signs_[pos]; }

    /// Sign word → signs; bit b set means position b is −1.
    void set_word(std::uint64_t word);
    void flip(std::size_t pos) { signs_[pos] = -signs_[pos]; }

    /// Σ_I block_I Π_k ε^{(k)}_{i_k}, computed exactly in double-double.
    [[nodiscard]] DoubleDouble full_sum(const double* block) const;

    /// Σ_{I : i_k = j} block_I Π_{l≠k} ε^{(l)}_{i_l}.
    DoubleDouble slice_sum(const double* block, std::size_t k, std::size_t j);

private:
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> strides_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> axis_of_;
    std::vector<double> signs_;
    std::vector<double> trailing_;
    std::vector<std::size_t> scratch_;
    std::size_t block_size_ = 1;
};

} // namespace khinlab::detail
