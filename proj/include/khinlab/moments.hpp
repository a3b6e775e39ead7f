#pragma once

#include <cstdint>
#include <vector>

#include "khinlab/enumeration.hpp"
#include "khinlab/tensor.hpp"

namespace khinlab {

enum class MomentMethod { FullEnum, RankOneProduct, Binomial };

const char* to_string(MomentMethod method);

struct MomentResult {
    double r;
    /// (2^{-ΣN} Σ_η |Σ_I η..·y_I|^r)^{1/r}
    double value;
    std::uint64_t configurations_enumerated;
    MomentMethod method;
};

/// r_j(t) = sign(sin 2^j π t), read off bit j of the binary expansion of t.
/// Dyadic points where the sine vanishes map to +1.
int rademacher(int j, double t);

/// Normalized L_r moment of the multiple Rademacher polynomial with
/// coefficients y, by exact enumeration of every sign assignment.
///
/// Sign words are walked in Gray-code order so each step flips one sign and
/// updates the multilinear sum through a single slice contraction. The word
/// is split into chunks on its high bits (see chunk_bits) which run in
/// parallel and reduce in chunk order, so the result does not depend on
/// `options.threads`.
MomentResult exact_moment(const CoefficientTensor& y, double r, const EnumerationOptions& options = {});

/// Moment of the separable tensor u1 ⊗ ... ⊗ um as the product of 1-D moments.
/// Zero coordinates are dropped; a factor whose remaining entries share one
/// absolute value goes through binomial_moment, otherwise through exact_moment.
MomentResult moment_rank_one(const std::vector<std::vector<double>>& factors, double r,
                             const EnumerationOptions& options = {});

} // namespace khinlab
