#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khinlab/moments.hpp"

namespace khinlab {

enum class WitnessKind { BlockOnes, Uniform, General };

const char* to_string(WitnessKind kind);

struct WitnessReport {
    int m;
    double r;
    std::uint64_t N;
    double l2;
    double moment;
    double ratio; ///< l2 / moment, a lower bound for K_{m,r}
    double theoretical_bound;
    WitnessKind kind;
};

/// Shape N^m; 1 where every index is in {1,2}, 0 elsewhere.
CoefficientTensor block_ones_witness(int m, std::size_t N);

/// Shape N^m with every entry N^{-m/2}.
CoefficientTensor uniform_witness(int m, std::size_t N);

/// Exact L_r moment of the normalized vector (1/√N, ..., 1/√N), grouping
/// sign vectors by their coordinate sum:
///   (2^{-N} Σ_k C(N,k)|N−2k|^r)^{1/r} / √N.
/// Binomial weights are taken in log space, so N may be large.
double binomial_moment(std::uint64_t N, double r);

/// l2 / exact_moment for an arbitrary tensor. Throws DegenerateInput on a zero tensor.
WitnessReport witness_ratio(const CoefficientTensor& y, double r, WitnessKind kind = WitnessKind::General,
                            const EnumerationOptions& options = {});

/// One report per N, in input order. Without an explicit kind, r ≤ p0 uses the
/// block-ones witness and r ∈ (p0, 2) the uniform one. Both are evaluated
/// through their rank-one structure, so N is not limited by the bit budget.
std::vector<WitnessReport> lower_bound_sweep(int m, double r, const std::vector<std::uint64_t>& N_values,
                                             std::optional<WitnessKind> kind = std::nullopt,
                                             const EnumerationOptions& options = {});

} // namespace khinlab
