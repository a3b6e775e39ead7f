#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "khinlab/constants.hpp"
#include "khinlab/forms.hpp"
#include "khinlab/moments.hpp"
#include "khinlab/reference.hpp"
#include "khinlab/seq_norms.hpp"
#include "khinlab/witnesses.hpp"
#include "test_support.hpp"

namespace {

using namespace khinlab;
using khinlab::testing::brute_force_form_norm;
using khinlab::testing::random_tensor;
using khinlab::testing::rel_err;

const CoefficientTensor kLittlewood({2, 2}, {1, 1, 1, -1});

std::vector<std::size_t> random_form_shape(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> order(2, 3);
    std::uniform_int_distribution<int> len(1, 4);
    std::vector<std::size_t> shape(static_cast<std::size_t>(order(rng)));
    for (auto& n : shape) {
        n = static_cast<std::size_t>(len(rng));
    }
    return shape;
}

TEST(MultilinearForm, Validation)
{
    EXPECT_THROW(MultilinearForm(CoefficientTensor({2}, {1, 1}), 2.0), DomainError);
    EXPECT_THROW(MultilinearForm(kLittlewood, 0.5), DomainError);
}

TEST(FormNorm, Examples)
{
    EXPECT_NEAR(form_norm(MultilinearForm(kLittlewood, Exponent::infinity())), 2.0, 1e-15);
    EXPECT_NEAR(form_norm(MultilinearForm(CoefficientTensor({2, 2}, {1, 0, 0, 1}), 2.0)), std::sqrt(2.0), 1e-15);
    EXPECT_EQ(form_norm(MultilinearForm(CoefficientTensor::zeros({3, 2, 2}), 3.0)), 0.0);
}

TEST(FormNorm, MatchesIndependentBruteForce)
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_tensor(rng, random_form_shape(rng));
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const MultilinearForm form(a, p);
            const double dual = conjugate_exponent(p).value();
            EXPECT_LE(rel_err(form_norm(form), brute_force_form_norm(a, dual)), 1e-12);
        }
        const MultilinearForm inf_form(a, Exponent::infinity());
        EXPECT_LE(rel_err(form_norm(inf_form), brute_force_form_norm(a, 1.0)), 1e-12);
    }
}

TEST(FormNorm, MatchesSerialReferenceAcrossChunking)
{
    std::mt19937_64 rng(103);
    const auto a = random_tensor(rng, {3, 7, 7});
    for (double p : {1.0, 2.5}) {
        const MultilinearForm form(a, p);
        EXPECT_EQ(form_norm(form, {.threads = 1}), form_norm(form, {.threads = 8}));
        EXPECT_LE(rel_err(form_norm(form), reference::form_norm(form)), 1e-12);
    }
}

TEST(FormNorm, BudgetCountsOnlyEnumeratedAxes)
{
    const MultilinearForm wide(CoefficientTensor::zeros({1000, 3}), 2.0);
    EXPECT_NO_THROW(form_norm(wide, {.bit_budget = 3}));
    EXPECT_THROW(form_norm(wide, {.bit_budget = 2}), BudgetExceeded);
}

TEST(FormNorm, SignInvariant)
{
    std::mt19937_64 rng(107);
    std::bernoulli_distribution coin;
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_tensor(rng, random_form_shape(rng));
        std::vector<std::vector<std::int8_t>> signs;
        for (std::size_t n : a.shape()) {
            std::vector<std::int8_t> axis(n);
            for (auto& s : axis) {
                s = coin(rng) ? 1 : -1;
            }
            signs.push_back(axis);
        }
        const auto b = sign_transform(a, SignAssignment(signs));
        EXPECT_LE(rel_err(form_norm(MultilinearForm(b, 2.5)), form_norm(MultilinearForm(a, 2.5))), 1e-12);
    }
}

TEST(MixedLhs, Examples)
{
    const MultilinearForm lw(kLittlewood, Exponent::infinity());
    EXPECT_NEAR(mixed_lhs_outer(lw), 2.0 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(mixed_lhs_inner(lw), 2.0 * std::sqrt(2.0), 1e-14);

    const MultilinearForm eye(CoefficientTensor({2, 2}, {1, 0, 0, 1}), 2.0);
    EXPECT_NEAR(mixed_lhs_outer(eye), std::sqrt(2.0), 1e-14);

    const std::vector<double> u{1.0, -0.5, 2.0};
    const std::vector<double> v{0.3, 0.4};
    const std::vector<double> w{1.0, 2.0, 2.0};
    const MultilinearForm rank_one(CoefficientTensor::outer_product({u, v, w}), 3.0);
    const double expected = lp_norm(u, 1.5) * lp_norm(v, 2.0) * lp_norm(w, 2.0);
    EXPECT_LE(rel_err(mixed_lhs_outer(rank_one), expected), 1e-13);
}

TEST(MixedLhs, RejectsSmallExponent)
{
    const MultilinearForm form(kLittlewood, 1.5);
    EXPECT_THROW(mixed_lhs_outer(form), DomainError);
    EXPECT_THROW(mixed_lhs_inner(form), DomainError);
    EXPECT_THROW(verify_mixed_littlewood(form, MixedTheorem::MixedC), DomainError);
}

TEST(MixedLhs, OrderingAndDegeneracy)
{
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> pick(2.0, 8.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_tensor(rng, random_form_shape(rng));
        const MultilinearForm form(a, pick(rng));
        EXPECT_LE(mixed_lhs_inner(form), mixed_lhs_outer(form) * (1.0 + 1e-12));

        const MultilinearForm flat(a, 2.0);
        const double l2 = l2_of_tensor(a);
        EXPECT_LE(rel_err(mixed_lhs_outer(flat), l2), 1e-13);
        EXPECT_LE(rel_err(mixed_lhs_inner(flat), l2), 1e-13);
        const auto report = verify_mixed_littlewood(flat, MixedTheorem::MixedC);
        EXPECT_EQ(report.constant, 1.0);
        EXPECT_TRUE(report.holds);
    }
}

TEST(VerifyMixedLittlewood, LittlewoodMatrixIsExtremal)
{
    const auto report = verify_mixed_littlewood(MultilinearForm(kLittlewood, Exponent::infinity()), MixedTheorem::MixedC);
    EXPECT_NEAR(report.lhs, 2.0 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(report.norm, 2.0, 1e-15);
    ASSERT_TRUE(report.ratio.has_value());
    EXPECT_NEAR(*report.ratio, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(report.constant, std::sqrt(2.0), 1e-15);
    EXPECT_TRUE(report.holds);
}

TEST(VerifyMixedLittlewood, ZeroFormIsDegenerateButHolds)
{
    const auto report =
        verify_mixed_littlewood(MultilinearForm(CoefficientTensor::zeros({2, 2}), 3.0), MixedTheorem::MixedD);
    EXPECT_EQ(report.lhs, 0.0);
    EXPECT_EQ(report.norm, 0.0);
    EXPECT_FALSE(report.ratio.has_value());
    EXPECT_TRUE(report.holds);
}

TEST(VerifyMixedLittlewood, HoldsOnRandomForms)
{
    std::mt19937_64 rng(113);
    const Exponent ps[] = {2.0, 2.5, 3.0, Exponent::infinity()};
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_tensor(rng, random_form_shape(rng));
        for (Exponent p : ps) {
            const MultilinearForm form(a, p);
            EXPECT_TRUE(verify_mixed_littlewood(form, MixedTheorem::MixedC).holds);
            EXPECT_TRUE(verify_mixed_littlewood(form, MixedTheorem::MixedD).holds);
        }
    }
}

TEST(Construction, PairExample)
{
    const CoefficientTensor y({2}, {1.0, 1.0});
    const auto form = littlewood_form_construction(y, 2.0);
    EXPECT_EQ(form.coefficients().shape(), (std::vector<std::size_t>{4, 2}));
    EXPECT_EQ(form.first_exponent().value(), 2.0);
    for (double a : form.coefficients().entries()) {
        EXPECT_EQ(std::abs(a), 0.5);
    }
    // Row i carries the signs of word i: bit set means −1.
    EXPECT_EQ(form.coefficients()[2 * 1 + 0], -0.5);
    EXPECT_EQ(form.coefficients()[2 * 1 + 1], 0.5);
    EXPECT_EQ(form.coefficients()[2 * 3 + 1], -0.5);
    EXPECT_NEAR(mixed_lhs_inner(form), std::sqrt(2.0), 1e-15);
    EXPECT_LE(rel_err(form_norm(form), exact_moment(y, 2.0).value), 1e-12);
}

TEST(Construction, PairRatioIsDyadicConstant)
{
    const CoefficientTensor y({2}, {1.0, 1.0});
    for (double p : {1.0, 1.2, 1.5, 1.8}) {
        const auto report = equivalence_report(y, p);
        ASSERT_TRUE(report.ratio.has_value());
        EXPECT_LE(rel_err(*report.ratio, std::exp2(1.0 / p - 0.5)), 1e-12);
        EXPECT_LE(rel_err(*report.ratio, report.constant), 1e-12);
        EXPECT_TRUE(report.holds);
    }
}

TEST(Construction, FormNormReproducesMoment)
{
    std::mt19937_64 rng(127);
    std::uniform_real_distribution<double> pick(1.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto shape = khinlab::testing::random_shape(rng, 2, 3);
        const auto y = random_tensor(rng, shape);
        const double p = pick(rng);
        const auto form = littlewood_form_construction(y, p);
        EXPECT_LE(rel_err(form_norm(form), exact_moment(y, p).value), 1e-10);
        EXPECT_LE(rel_err(mixed_lhs_inner(form), l2_of_tensor(y)), 1e-12);
    }
}

TEST(Construction, Errors)
{
    const CoefficientTensor y({2}, {1.0, 1.0});
    EXPECT_THROW(littlewood_form_construction(y, 0.5), DomainError);
    EXPECT_THROW(littlewood_form_construction(y, 2.5), DomainError);
    EXPECT_THROW(littlewood_form_construction(CoefficientTensor::zeros({4, 4}), 1.0, {.bit_budget = 15}),
                 BudgetExceeded);
}

TEST(EquivalenceReport, BlockOnesAttainsConstant)
{
    const double p0 = cached_breakpoint().p0;
    for (double p : {1.0, 1.5, p0}) {
        const auto report = equivalence_report(block_ones_witness(2, 2), p);
        EXPECT_LE(rel_err(*report.ratio, std::pow(haagerup_constant(p).value, 2)), 1e-10);
    }
}

TEST(EquivalenceReport, UniformApproachesGaussianConstant)
{
    for (double p : {1.86, 1.9, 1.95}) {
        double previous = 0.0;
        for (std::size_t n : {4, 8, 12}) {
            const auto report = equivalence_report(uniform_witness(1, n), p);
            EXPECT_GT(*report.ratio, previous);
            EXPECT_LE(*report.ratio, report.constant * (1.0 + 1e-9));
            previous = *report.ratio;
        }
        EXPECT_LE(rel_err(previous, haagerup_constant(p).value), 0.05);
        EXPECT_LE(rel_err(previous, 1.0 / binomial_moment(12, p)), 1e-10);
    }
}

} // namespace
