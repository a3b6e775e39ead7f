#pragma once

#include <cstddef>
#include <cstdint>

namespace khinlab {

inline constexpr int kDefaultBitBudget = 26;

/// Knobs shared by every exhaustive sign-hypercube enumeration.
struct EnumerationOptions {
    /// Refuse enumerations over more than this many sign bits.
    int bit_budget = kDefaultBitBudget;
    /// Worker cap; 0 uses the OpenMP default.
    int threads = 0;
};

/// Throws BudgetExceeded when `bits` exceeds the budget.
void check_budget(std::size_t bits, int budget, const char* what);

/// Number of high bits used to split a `bits`-wide sign word into
/// independent chunks. Depends on `bits` only, never on the thread count,
/// so partitioned reductions are bit-identical for any number of workers.
constexpr std::size_t chunk_bits(std::size_t bits)
{
    constexpr std::size_t kLowBits = 10;
    return bits > kLowBits ? bits - kLowBits : 0;
}

} // namespace khinlab
