#include "khinlab/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "contraction.hpp"
#include "parallel.hpp"
#include "khinlab/constants.hpp"
#include "khinlab/errors.hpp"
#include "khinlab/seq_norms.hpp"

namespace khinlab {

namespace {

constexpr double kHoldsSlack = 1e-9;

void require_littlewood_exponent(Exponent p, const char* what)
{
    if (p.value() < 2.0) {
        throw DomainError(std::string(what) + " requires p >= 2, got " + p.to_string());
    }
}

// Coefficients as an N1 × (N2···NM) matrix.
RealMatrix first_axis_matrix(const CoefficientTensor& a)
{
    const std::size_t rows = a.shape().front();
    return RealMatrix(rows, a.size() / rows, std::vector<double>(a.entries().begin(), a.entries().end()));
}

InequalityReport make_report(double lhs, double norm, double constant, MixedTheorem which)
{
    std::optional<double> ratio;
    if (norm > 0.0) {
        ratio = lhs / norm;
    }
    const bool holds = lhs <= constant * norm * (1.0 + kHoldsSlack);
    return InequalityReport{lhs, norm, ratio, constant, which, holds};
}

} // namespace

MultilinearForm::MultilinearForm(CoefficientTensor coefficients, Exponent first_exponent)
    : coefficients_(std::move(coefficients)), first_exponent_(first_exponent)
{
    if (coefficients_.order() < 2) {
        throw DomainError("a multilinear form needs at least two factors");
    }
    if (first_exponent_.value() < 1.0) {
        throw DomainError("first factor exponent must be >= 1, got " + first_exponent_.to_string());
    }
}

const char* to_string(MixedTheorem which)
{
    switch (which) {
    case MixedTheorem::MixedC:
        return "C";
    case MixedTheorem::MixedD:
        return "D";
    }
    return "?";
}

double form_norm(const MultilinearForm& form, const EnumerationOptions& options)
{
    const auto& a = form.coefficients();
    const Exponent dual = conjugate_exponent(form.first_exponent());
    const std::vector<std::size_t> sub_shape(a.shape().begin() + 1, a.shape().end());
    const std::size_t rows = a.shape().front();

    std::size_t bits = 0;
    for (std::size_t n : sub_shape) {
        bits += n;
    }
    check_budget(bits, options.bit_budget, "form_norm");

    // Negating the last ℓ_∞ argument negates the contraction, so its final
    // sign stays at +1.
    const std::size_t walked = bits - 1;
    const std::size_t high = chunk_bits(walked);
    const std::size_t low = walked - high;
    const std::int64_t chunks = std::int64_t{1} << high;
    const std::uint64_t steps = std::uint64_t{1} << low;

    std::vector<double> best(static_cast<std::size_t>(chunks), 0.0);
    const double* data = a.entries().data();

#pragma omp parallel num_threads(detail::worker_count(options))
    {
        detail::SignedContractor contractor(sub_shape);
        const std::size_t block = contractor.block_size();
        std::vector<DoubleDouble> contraction(rows);
        std::vector<double> values(rows);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < chunks; ++c) {
            contractor.set_word(static_cast<std::uint64_t>(c) << low);
            for (std::size_t i = 0; i < rows; ++i) {
                contraction[i] = contractor.full_sum(data + i * block);
                values[i] = contraction[i].value();
            }
            double chunk_best = lp_norm(values, dual);
            for (std::uint64_t s = 1; s < steps; ++s) {
                const auto pos = static_cast<std::size_t>(std::countr_zero(s));
                const std::size_t k = contractor.axis_of(pos);
                const std::size_t j = contractor.index_of(pos);
                const double factor = -2.0 * contractor.sign_at(pos);
                for (std::size_t i = 0; i < rows; ++i) {
                    DoubleDouble delta = contractor.slice_sum(data + i * block, k, j);
                    delta.scale(factor);
                    contraction[i].add(delta);
                    values[i] = contraction[i].value();
                }
                contractor.flip(pos);
                chunk_best = std::max(chunk_best, lp_norm(values, dual));
            }
            best[static_cast<std::size_t>(c)] = chunk_best;
        }
    }

    double result = 0.0;
    for (double b : best) {
        result = std::max(result, b);
    }
    return result;
}

double mixed_lhs_outer(const MultilinearForm& form)
{
    require_littlewood_exponent(form.first_exponent(), "mixed_lhs_outer");
    const Exponent outer = conjugate_exponent(form.first_exponent());
    return mixed_norm(first_axis_matrix(form.coefficients()), outer, 2.0);
}

double mixed_lhs_inner(const MultilinearForm& form)
{
    require_littlewood_exponent(form.first_exponent(), "mixed_lhs_inner");
    const Exponent inner = conjugate_exponent(form.first_exponent());
    return mixed_norm(first_axis_matrix(form.coefficients()).transposed(), 2.0, inner);
}

InequalityReport verify_mixed_littlewood(const MultilinearForm& form, MixedTheorem which,
                                         const EnumerationOptions& options)
{
    require_littlewood_exponent(form.first_exponent(), "verify_mixed_littlewood");
    const double lhs = which == MixedTheorem::MixedC ? mixed_lhs_outer(form) : mixed_lhs_inner(form);
    const double norm = form_norm(form, options);
    const double constant = mixed_littlewood_constant(static_cast<int>(form.arity()), form.first_exponent());
    return make_report(lhs, norm, constant, which);
}

MultilinearForm littlewood_form_construction(const CoefficientTensor& y, double p, const EnumerationOptions& options)
{
    if (!(p >= 1.0 && p <= 2.0)) {
        throw DomainError("littlewood_form_construction requires p in [1, 2], got " + std::to_string(p));
    }
    const std::size_t bits = y.sign_bits();
    check_budget(y.order() * bits, options.bit_budget, "littlewood_form_construction");

    const std::size_t rows = std::size_t{1} << bits;
    const std::size_t block = y.size();
    const double scale = std::exp2(-static_cast<double>(bits) / p);

    std::vector<std::size_t> shape{rows};
    shape.insert(shape.end(), y.shape().begin(), y.shape().end());
    std::vector<double> entries(rows * block);

    detail::SignedContractor signs(y.shape());
    const std::size_t m = y.order();
    std::vector<std::size_t> offsets(m, 0);
    for (std::size_t k = 1; k < m; ++k) {
        offsets[k] = offsets[k - 1] + y.shape()[k - 1];
    }
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < rows; ++i) {
        signs.set_word(i);
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t flat = 0; flat < block; ++flat) {
            double w = scale;
            for (std::size_t k = 0; k < m; ++k) {
                w *= signs.sign_at(offsets[k] + idx[k]);
            }
            entries[i * block + flat] = w * y[flat];
            for (std::size_t k = m; k-- > 0;) {
                if (++idx[k] < y.shape()[k]) {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    return MultilinearForm(CoefficientTensor(std::move(shape), std::move(entries)), conjugate_exponent(p));
}

InequalityReport equivalence_report(const CoefficientTensor& y, double p, const EnumerationOptions& options)
{
    const auto form = littlewood_form_construction(y, p, options);
    const double lhs = mixed_lhs_inner(form);
    const double norm = form_norm(form, options);
    const double constant = std::pow(haagerup_constant(p).value, static_cast<int>(y.order()));
    return make_report(lhs, norm, constant, MixedTheorem::MixedD);
}

} // namespace khinlab
