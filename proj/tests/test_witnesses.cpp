#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "khinlab/constants.hpp"
#include "khinlab/witnesses.hpp"
#include "test_support.hpp"

namespace {

using namespace khinlab;
using khinlab::testing::binomial_oracle;
using khinlab::testing::rel_err;

TEST(BlockOnesWitness, Shape)
{
    const auto w = block_ones_witness(2, 3);
    EXPECT_EQ(w, CoefficientTensor({3, 3}, {1, 1, 0, 1, 1, 0, 0, 0, 0}));
    EXPECT_EQ(block_ones_witness(1, 2), CoefficientTensor({2}, {1, 1}));
    EXPECT_LE(rel_err(l2_of_tensor(block_ones_witness(3, 4)), std::pow(2.0, 1.5)), 1e-15);
    EXPECT_THROW(block_ones_witness(2, 1), DomainError);
    EXPECT_THROW(block_ones_witness(0, 3), DomainError);
}

TEST(UniformWitness, Shape)
{
    EXPECT_EQ(uniform_witness(1, 4), CoefficientTensor({4}, {0.5, 0.5, 0.5, 0.5}));
    EXPECT_NEAR(l2_of_tensor(uniform_witness(2, 3)), 1.0, 1e-14);
    EXPECT_THROW(uniform_witness(0, 3), DomainError);
}

TEST(UniformWitness, MomentFactorsAcrossAxes)
{
    const CoefficientTensor factor({2}, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    for (double r : {0.5, 1.0, 1.7}) {
        const double one = exact_moment(factor, r).value;
        EXPECT_LE(rel_err(exact_moment(uniform_witness(2, 2), r).value, one * one), 1e-13);
    }
}

TEST(BinomialMoment, SmallCase)
{
    EXPECT_NEAR(binomial_moment(2, 1.0), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(binomial_moment(1, 0.3), 1.0, 1e-14);
}

TEST(BinomialMoment, MatchesIntegerBinomialOracle)
{
    for (unsigned N = 1; N <= 60; ++N) {
        for (double r : {0.3, 1.0, 1.5, 2.0, 4.0}) {
            EXPECT_LE(rel_err(binomial_moment(N, r), binomial_oracle(N, r)), 1e-12) << N << " " << r;
        }
    }
}

TEST(BinomialMoment, EqualsFullEnumerationUpToTwenty)
{
    for (std::size_t N = 1; N <= 20; ++N) {
        for (double r : {0.25, 0.5, 1.0, 1.5, 1.9, 3.0}) {
            EXPECT_LE(rel_err(binomial_moment(N, r), exact_moment(uniform_witness(1, N), r).value), 1e-12)
                << N << " " << r;
        }
    }
}

TEST(BinomialMoment, CentralLimit)
{
    // 50-digit evaluation of the binomial sum at N = 10^4, r = 1.
    EXPECT_LE(rel_err(binomial_moment(10000, 1.0), 0.797864613938215), 1e-13);
    EXPECT_NEAR(binomial_moment(10000, 1.0), std::sqrt(2.0 / std::numbers::pi), 1e-3);
    EXPECT_TRUE(std::isfinite(binomial_moment(100000, 1.5)));
}

TEST(BinomialMoment, Errors)
{
    EXPECT_THROW(binomial_moment(0, 1.0), DomainError);
    EXPECT_THROW(binomial_moment(4, 0.0), DomainError);
}

TEST(WitnessRatio, BlockOnesAttainsDyadicConstant)
{
    const double p0 = cached_breakpoint().p0;
    for (double r : {0.5, 1.0, 1.5, p0}) {
        for (std::size_t N : {2, 3, 4}) {
            const auto rep2 = witness_ratio(block_ones_witness(2, N), r, WitnessKind::BlockOnes);
            EXPECT_LE(rel_err(rep2.ratio, std::exp2((2.0 - r) / r)), 1e-12);
            EXPECT_LE(rel_err(rep2.ratio, rep2.theoretical_bound), 1e-12);
            const auto rep3 = witness_ratio(block_ones_witness(3, N), r, WitnessKind::BlockOnes);
            EXPECT_LE(rel_err(rep3.ratio, std::pow(std::exp2((2.0 - r) / (2.0 * r)), 3)), 1e-12);
        }
    }
}

TEST(WitnessRatio, SecondMomentRatioIsOne)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto y = khinlab::testing::random_tensor(rng, khinlab::testing::random_shape(rng, 3, 3));
        EXPECT_NEAR(witness_ratio(y, 2.0).ratio, 1.0, 1e-12);
    }
}

TEST(WitnessRatio, NeverExceedsTheConstant)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const auto y = khinlab::testing::random_tensor(rng, khinlab::testing::random_shape(rng, 3, 4));
        for (double r : {0.5, 1.0, 1.5, 1.9, 3.0}) {
            const auto rep = witness_ratio(y, r);
            EXPECT_LE(rep.ratio, rep.theoretical_bound * (1.0 + 1e-9));
        }
    }
}

TEST(WitnessRatio, ZeroTensorIsDegenerate)
{
    EXPECT_THROW(witness_ratio(CoefficientTensor::zeros({2, 2}), 1.0), DegenerateInput);
}

TEST(LowerBoundSweep, GaussianRegimeConverges)
{
    const auto reports = lower_bound_sweep(1, 1.9, {10000});
    ASSERT_EQ(reports.size(), 1U);
    EXPECT_EQ(reports[0].kind, WitnessKind::Uniform);
    EXPECT_NEAR(reports[0].ratio, haagerup_constant(1.9).value, 1e-3);
}

TEST(LowerBoundSweep, DyadicRegimeIsExact)
{
    for (std::uint64_t N : {2, 5, 100, 100000}) {
        const auto reports = lower_bound_sweep(2, 1.0, {N});
        EXPECT_EQ(reports[0].kind, WitnessKind::BlockOnes);
        EXPECT_NEAR(reports[0].ratio, 2.0, 1e-13);
    }
}

TEST(LowerBoundSweep, FlatLimit)
{
    const auto reports = lower_bound_sweep(1, 2.0 - 1e-9, {64, 4096});
    EXPECT_NEAR(reports.back().ratio, 1.0, 1e-8);
}

TEST(LowerBoundSweep, MonotoneApproachInGaussianRegime)
{
    const std::vector<std::uint64_t> Ns{1 << 4, 1 << 6, 1 << 8, 1 << 10, 1 << 12, 1 << 14};
    for (int m : {1, 2, 3}) {
        for (double r : {1.86, 1.9, 1.95}) {
            const auto reports = lower_bound_sweep(m, r, Ns);
            const double target = std::pow(haagerup_constant(r).value, m);
            for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
                EXPECT_LE(reports[i].ratio, reports[i + 1].ratio * (1.0 + 1e-12));
                EXPECT_LE(std::abs(reports[i + 1].ratio - target), std::abs(reports[i].ratio - target) * (1.0 + 1e-12));
            }
            EXPECT_LE(reports.back().ratio, target * (1.0 + 1e-9));
            EXPECT_NEAR(reports.back().ratio, target, 1e-2);
        }
    }
}

TEST(LowerBoundSweep, PreservesInputOrderAcrossThreads)
{
    const std::vector<std::uint64_t> Ns{4096, 16, 1024, 64, 2};
    const auto serial = lower_bound_sweep(2, 1.9, Ns, std::nullopt, {.threads = 1});
    const auto parallel = lower_bound_sweep(2, 1.9, Ns, std::nullopt, {.threads = 4});
    ASSERT_EQ(serial.size(), Ns.size());
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        EXPECT_EQ(serial[i].N, Ns[i]);
        EXPECT_EQ(parallel[i].N, Ns[i]);
        EXPECT_EQ(serial[i].ratio, parallel[i].ratio);
    }
}

TEST(LowerBoundSweep, Errors)
{
    EXPECT_THROW(lower_bound_sweep(1, 2.0, {4}), DomainError);
    EXPECT_THROW(lower_bound_sweep(1, 0.0, {4}), DomainError);
    EXPECT_THROW(lower_bound_sweep(0, 1.0, {4}), DomainError);
    EXPECT_THROW(lower_bound_sweep(1, 1.0, {1}), DomainError);
    EXPECT_TRUE(lower_bound_sweep(1, 1.0, {}).empty());
}

} // namespace
