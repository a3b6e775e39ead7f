#include "khinlab/moments.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "contraction.hpp"
#include "parallel.hpp"
#include "khinlab/errors.hpp"
#include "khinlab/seq_norms.hpp"
#include "khinlab/summation.hpp"
#include "khinlab/witnesses.hpp"

namespace khinlab {

namespace {

void require_moment_exponent(double r)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("moment exponent r must be a positive finite number, got " + std::to_string(r));
    }
}

double root_of_mean(double sum, std::size_t log2_count, double r)
{
    const double mean = std::ldexp(sum, -static_cast<int>(log2_count));
    return mean == 0.0 ? 0.0 : std::exp(std::log(mean) / r);
}

} // namespace

const char* to_string(MomentMethod method)
{
    switch (method) {
    case MomentMethod::FullEnum:
        return "full_enum";
    case MomentMethod::RankOneProduct:
        return "rank_one_product";
    case MomentMethod::Binomial:
        return "binomial";
    }
    return "?";
}

int rademacher(int j, double t)
{
    if (j < 1) {
        throw DomainError("rademacher index j must be >= 1");
    }
    if (!(t >= 0.0 && t < 1.0)) {
        throw DomainError("rademacher argument t must lie in [0, 1)");
    }
    // sin(2^j π t) > 0 iff floor(2^j t) is even; scaling by 2^j is exact.
    const double scaled = std::ldexp(t, j);
    if (!std::isfinite(scaled)) {
        return 1;
    }
    const double whole = std::floor(scaled);
    if (whole == scaled) {
        return 1;
    }
    return std::fmod(whole, 2.0) == 0.0 ? 1 : -1;
}

MomentResult exact_moment(const CoefficientTensor& y, double r, const EnumerationOptions& options)
{
    require_moment_exponent(r);
    const std::size_t bits = y.sign_bits();
    check_budget(bits, options.bit_budget, "exact_moment");

    // Negating every sign of one axis negates the sum, so the top position
    // stays at +1 and only the remaining bits are walked.
    const std::size_t walked = bits - 1;
    const std::size_t high = chunk_bits(walked);
    const std::size_t low = walked - high;
    const std::int64_t chunks = std::int64_t{1} << high;
    const std::uint64_t steps = std::uint64_t{1} << low;

    std::vector<CompensatedSum> partial(static_cast<std::size_t>(chunks));
    const double* data = y.entries().data();

#pragma omp parallel num_threads(detail::worker_count(options))
    {
        detail::SignedContractor contractor(y.shape());
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < chunks; ++c) {
            contractor.set_word(static_cast<std::uint64_t>(c) << low);
            DoubleDouble sum = contractor.full_sum(data);
            CompensatedSum acc;
            acc.add(abs_pow(sum.value(), r));
            for (std::uint64_t s = 1; s < steps; ++s) {
                const auto pos = static_cast<std::size_t>(std::countr_zero(s));
                DoubleDouble delta =
                    contractor.slice_sum(data, contractor.axis_of(pos), contractor.index_of(pos));
                delta.scale(-2.0 * contractor.sign_at(pos));
                sum.add(delta);
                contractor.flip(pos);
                acc.add(abs_pow(sum.value(), r));
            }
            partial[static_cast<std::size_t>(c)] = acc;
        }
    }

    CompensatedSum total;
    for (const auto& p : partial) {
        total.add(p);
    }
    return MomentResult{r, root_of_mean(total.value(), walked, r), std::uint64_t{1} << bits,
                        MomentMethod::FullEnum};
}

MomentResult moment_rank_one(const std::vector<std::vector<double>>& factors, double r,
                             const EnumerationOptions& options)
{
    require_moment_exponent(r);
    if (factors.empty()) {
        throw DomainError("moment_rank_one needs at least one factor");
    }
    double value = 1.0;
    std::uint64_t configurations = 0;
    for (const auto& factor : factors) {
        if (factor.empty()) {
            throw ShapeMismatch("moment_rank_one: factor vectors must be non-empty");
        }
        std::vector<double> nonzero;
        for (double x : factor) {
            if (!std::isfinite(x)) {
                throw DomainError("moment_rank_one: factor entries must be finite");
            }
            if (x != 0.0) {
                nonzero.push_back(x);
            }
        }
        if (nonzero.empty()) {
            return MomentResult{r, 0.0, configurations, MomentMethod::RankOneProduct};
        }
        const double magnitude = std::abs(nonzero.front());
        bool flat = true;
        for (double x : nonzero) {
            flat = flat && std::abs(x) == magnitude;
        }
        const std::size_t n = nonzero.size();
        if (flat) {
            value *= magnitude * std::sqrt(static_cast<double>(n)) * binomial_moment(n, r);
            configurations += n + 1;
        } else {
            const auto sub = exact_moment(CoefficientTensor({n}, std::move(nonzero)), r, options);
            value *= sub.value;
            configurations += sub.configurations_enumerated;
        }
    }
    return MomentResult{r, value, configurations, MomentMethod::RankOneProduct};
}

} // namespace khinlab
