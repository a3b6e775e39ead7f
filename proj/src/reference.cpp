#include "khinlab/reference.hpp"

#include <algorithm>
#include <cmath>

#include "contraction.hpp"
#include "khinlab/errors.hpp"
#include "khinlab/seq_norms.hpp"
#include "khinlab/summation.hpp"

namespace khinlab::reference {

MomentResult exact_moment(const CoefficientTensor& y, double r, int bit_budget)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("moment exponent r must be a positive finite number");
    }
    const std::size_t bits = y.sign_bits();
    check_budget(bits, bit_budget, "reference::exact_moment");

    detail::SignedContractor contractor(y.shape());
    CompensatedSum acc;
    const std::uint64_t words = std::uint64_t{1} << bits;
    for (std::uint64_t w = 0; w < words; ++w) {
        contractor.set_word(w);
        acc.add(abs_pow(contractor.full_sum(y.entries().data()).value(), r));
    }
    const double mean = std::ldexp(acc.value(), -static_cast<int>(bits));
    const double value = mean == 0.0 ? 0.0 : std::exp(std::log(mean) / r);
    return MomentResult{r, value, words, MomentMethod::FullEnum};
}

double form_norm(const MultilinearForm& form, int bit_budget)
{
    const auto& a = form.coefficients();
    const Exponent dual = conjugate_exponent(form.first_exponent());
    std::vector<std::size_t> sub_shape(a.shape().begin() + 1, a.shape().end());
    detail::SignedContractor contractor(sub_shape);
    const std::size_t bits = contractor.positions();
    check_budget(bits, bit_budget, "reference::form_norm");

    const std::size_t rows = a.shape().front();
    const std::size_t block = contractor.block_size();
    std::vector<double> b(rows);
    double best = 0.0;
    const std::uint64_t words = std::uint64_t{1} << bits;
    for (std::uint64_t w = 0; w < words; ++w) {
        contractor.set_word(w);
        for (std::size_t i = 0; i < rows; ++i) {
            b[i] = contractor.full_sum(a.entries().data() + i * block).value();
        }
        best = std::max(best, lp_norm(b, dual));
    }
    return best;
}

} // namespace khinlab::reference
