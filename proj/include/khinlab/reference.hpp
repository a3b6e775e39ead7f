#pragma once

#include "khinlab/enumeration.hpp"
#include "khinlab/forms.hpp"
#include "khinlab/moments.hpp"

// Serial brute-force kernels: every sign word in binary order, every
// multilinear sum recomputed from scratch. Kept as test oracles and as the
// baseline in the benchmark.
namespace khinlab::reference {

MomentResult exact_moment(const CoefficientTensor& y, double r, int bit_budget = kDefaultBitBudget);

double form_norm(const MultilinearForm& form, int bit_budget = kDefaultBitBudget);

} // namespace khinlab::reference
