#include "contraction.hpp"

namespace khinlab::detail {

SignedContractor::SignedContractor(std::vector<std::size_t> shape) : shape_(std::move(shape))
{
    strides_.assign(shape_.size(), 1);
    for (std::size_t k = shape_.size(); k-- > 1;) {
        strides_[k - 1] = strides_[k] * shape_[k];
    }
    std::size_t offset = 0;
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        offsets_.push_back(offset);
        for (std::size_t j = 0; j < shape_[k]; ++j) {
            axis_of_.push_back(k);
        }
        offset += shape_[k];
        block_size_ *= shape_[k];
    }
    signs_.assign(offset, 1.0);
    trailing_.reserve(block_size_);
}

void SignedContractor::set_word(std::uint64_t word)
{
    for (std::size_t b = 0; b < signs_.size(); ++b) {
        signs_[b] = ((word >> b) & 1U) != 0 ? -1.0 : 1.0;
    }
}

DoubleDouble SignedContractor::full_sum(const double* block) const
{
    const std::size_t m = shape_.size();
    std::vector<std::size_t> idx(m, 0);
    DoubleDouble acc;
    for (std::size_t flat = 0; flat < block_size_; ++flat) {
        double w = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            w *= signs_[offsets_[k] + idx[k]];
        }
        acc.add(w * block[flat]);
        for (std::size_t k = m; k-- > 0;) {
            if (++idx[k] < shape_[k]) {
                break;
            }
            idx[k] = 0;
        }
    }
    return acc;
}

DoubleDouble SignedContractor::slice_sum(const double* block, std::size_t k, std::size_t j)
{
    const std::size_t m = shape_.size();
    DoubleDouble acc;
    if (m == 1) {
        acc.add(block[j]);
        return acc;
    }

    // Sign products over the trailing axes k+1..m-1, contiguous in memory.
    const std::size_t inner = strides_[k];
    trailing_.assign(inner, 1.0);
    if (k + 1 < m) {
        auto& idx = scratch_;
        idx.assign(m, 0);
        for (std::size_t t = 0; t < inner; ++t) {
            double w = 1.0;
            for (std::size_t l = k + 1; l < m; ++l) {
                w *= signs_[offsets_[l] + idx[l]];
            }
            trailing_[t] = w;
            for (std::size_t l = m; l-- > k + 1;) {
                if (++idx[l] < shape_[l]) {
                    break;
                }
                idx[l] = 0;
            }
        }
    }

    // Leading axes 0..k-1 are walked by an odometer.
    std::size_t outer = 1;
    for (std::size_t l = 0; l < k; ++l) {
        outer *= shape_[l];
    }
    auto& lead = scratch_;
    lead.assign(k, 0);
    const std::size_t span = shape_[k] * inner;
    for (std::size_t o = 0; o < outer; ++o) {
        double w = 1.0;
        for (std::size_t l = 0; l < k; ++l) {
            w *= signs_[offsets_[l] + lead[l]];
        }
        const double* row = block + o * span + j * inner;
        for (std::size_t t = 0; t < inner; ++t) {
            acc.add(w * trailing_[t] * row[t]);
        }
        for (std::size_t l = k; l-- > 0;) {
            if (++lead[l] < shape_[l]) {
                break;
            }
            lead[l] = 0;
        }
    }
    return acc;
}

} // namespace khinlab::detail
