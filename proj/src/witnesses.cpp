#include "khinlab/witnesses.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "khinlab/constants.hpp"
#include "khinlab/errors.hpp"
#include "khinlab/seq_norms.hpp"
#include "khinlab/summation.hpp"

namespace khinlab {

namespace {

std::vector<std::size_t> cube_shape(int m, std::size_t N)
{
    if (m < 1) {
        throw DomainError("witness order m must be >= 1");
    }
    return std::vector<std::size_t>(static_cast<std::size_t>(m), N);
}

} // namespace

const char* to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::BlockOnes:
        return "block";
    case WitnessKind::Uniform:
        return "uniform";
    case WitnessKind::General:
        return "general";
    }
    return "?";
}

CoefficientTensor block_ones_witness(int m, std::size_t N)
{
    cube_shape(m, N);
    if (N < 2) {
        throw DomainError("block_ones_witness requires N >= 2");
    }
    std::vector<double> head(N, 0.0);
    head[0] = head[1] = 1.0;
    return CoefficientTensor::outer_product(std::vector<std::vector<double>>(static_cast<std::size_t>(m), head));
}

CoefficientTensor uniform_witness(int m, std::size_t N)
{
    auto shape = cube_shape(m, N);
    if (N < 1) {
        throw DomainError("uniform_witness requires N >= 1");
    }
    auto tensor = CoefficientTensor::zeros(shape);
    const double entry = std::pow(static_cast<double>(N), -0.5 * m);
    for (double& e : tensor.mutable_entries()) {
        e = entry;
    }
    return tensor;
}

double binomial_moment(std::uint64_t N, double r)
{
    if (N < 1) {
        throw DomainError("binomial_moment requires N >= 1");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("binomial_moment requires a positive finite r");
    }
    // Weights C(N,k)/C(N,⌊N/2⌋) by the ratio recurrence walking down from the
    // centre; terms k and N−k coincide and normalizing by the weight total
    // removes the 2^{-N} factor.
    const auto n = static_cast<double>(N);
    CompensatedSum weighted;
    CompensatedSum weights;
    double w = 1.0;
    for (std::uint64_t k = N / 2 + 1; k-- > 0;) {
        const auto kd = static_cast<double>(k);
        const double distance = n - 2.0 * kd;
        if (distance == 0.0) {
            weights.add(w);
        } else {
            weighted.add(2.0 * w * abs_pow(distance, r));
            weights.add(2.0 * w);
        }
        if (k == 0 || w == 0.0) {
            break;
        }
        w *= kd / (n - kd + 1.0);
    }
    const double mean = weighted.value() / weights.value();
    return std::exp(std::log(mean) / r - 0.5 * std::log(n));
}

WitnessReport witness_ratio(const CoefficientTensor& y, double r, WitnessKind kind, const EnumerationOptions& options)
{
    if (y.is_zero()) {
        throw DegenerateInput("witness_ratio is undefined for the zero tensor");
    }
    const auto moment = exact_moment(y, r, options);
    const double l2 = l2_of_tensor(y);
    const int m = static_cast<int>(y.order());
    std::uint64_t N = 0;
    for (std::size_t d : y.shape()) {
        N = std::max<std::uint64_t>(N, d);
    }
    return WitnessReport{m, r, N, l2, moment.value, l2 / moment.value, multiple_khintchine_constant(m, r), kind};
}

std::vector<WitnessReport> lower_bound_sweep(int m, double r, const std::vector<std::uint64_t>& N_values,
                                             std::optional<WitnessKind> kind, const EnumerationOptions& options)
{
    if (m < 1) {
        throw DomainError("lower_bound_sweep requires m >= 1");
    }
    if (!(r > 0.0 && r < 2.0)) {
        throw DomainError("lower_bound_sweep requires 0 < r < 2, got " + std::to_string(r));
    }
    const WitnessKind chosen =
        kind.value_or(r <= cached_breakpoint().p0 ? WitnessKind::BlockOnes : WitnessKind::Uniform);
    if (chosen == WitnessKind::General) {
        throw DomainError("lower_bound_sweep supports the block and uniform witness families only");
    }
    for (std::uint64_t N : N_values) {
        if (N < (chosen == WitnessKind::BlockOnes ? 2U : 1U)) {
            throw DomainError("lower_bound_sweep: N = " + std::to_string(N) + " is too small for the " +
                              to_string(chosen) + " witness");
        }
    }

    const double bound = multiple_khintchine_constant(m, r);
    std::vector<WitnessReport> reports(N_values.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(N_values.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::worker_count(options))
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const std::uint64_t N = N_values[static_cast<std::size_t>(i)];
            double l2 = 0.0;
            double moment = 0.0;
            if (chosen == WitnessKind::BlockOnes) {
                std::vector<double> head(N, 0.0);
                head[0] = head[1] = 1.0;
                const std::vector<std::vector<double>> factors(static_cast<std::size_t>(m), head);
                moment = moment_rank_one(factors, r, options).value;
                l2 = std::sqrt(std::exp2(m));
            } else {
                const auto n = static_cast<double>(N);
                moment = std::pow(binomial_moment(N, r), m);
                l2 = std::sqrt(std::pow(n, m)) * std::pow(n, -0.5 * m);
            }
            reports[static_cast<std::size_t>(i)] = WitnessReport{m, r, N, l2, moment, l2 / moment, bound, chosen};
        } catch (...) {
#pragma omp critical(khinlab_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return reports;
}

} // namespace khinlab
