#pragma once

#include <optional>

#include "khinlab/enumeration.hpp"
#include "khinlab/exponent.hpp"
#include "khinlab/tensor.hpp"

namespace khinlab {

/// M-linear form T: X_p × X_∞ × ... × X_∞ → ℝ, T(e_{i1},...,e_{iM}) = a_{i1...iM}.
class MultilinearForm {
public:
    MultilinearForm(CoefficientTensor coefficients, Exponent first_exponent);

    [[nodiscard]] const CoefficientTensor& coefficients() const { return coefficients_; }
    [[nodiscard]] Exponent first_exponent() const { return first_exponent_; }
    [[nodiscard]] std::size_t arity() const { return coefficients_.order(); }

private:
    CoefficientTensor coefficients_;
    Exponent first_exponent_;
};

enum class MixedTheorem { MixedC, MixedD };

const char* to_string(MixedTheorem which);

struct InequalityReport {
    double lhs;
    double norm;
    std::optional<double> ratio; ///< lhs / norm, empty when norm == 0
    double constant;
    MixedTheorem theorem;
    bool holds; ///< lhs ≤ constant · norm · (1 + 1e-9)
};

/// ‖T‖ = sup over the unit balls. The ℓ_∞ factors are maximized over their
/// sign extreme points; for fixed signs the sup over the ℓ_p ball is the
/// dual ℓ_{p*} norm of the contraction b_{i1} = Σ a_{i1 i2..iM} ε_{i2}···ε_{iM}.
/// Enumeration is Gray-coded and chunked the same way as exact_moment.
double form_norm(const MultilinearForm& form, const EnumerationOptions& options = {});

/// (Σ_{i1} (Σ_{i2..iM} |a|^2)^{p*/2})^{1/p*}, p* = p/(p−1). Requires p ≥ 2.
double mixed_lhs_outer(const MultilinearForm& form);

/// (Σ_{i2..iM} (Σ_{i1} |a|^{p*})^{2/p*})^{1/2}. Requires p ≥ 2.
double mixed_lhs_inner(const MultilinearForm& form);

InequalityReport verify_mixed_littlewood(const MultilinearForm& form, MixedTheorem which,
                                         const EnumerationOptions& options = {});

/// Builds the (m+1)-linear form on X_{p*} × X_∞^m whose first axis runs over
/// all 2^B sign assignments (B = ΣN_j, binary order, set bit = −1):
///   A(e_i, e_{j1},...,e_{jm}) = 2^{-B/p} · y_{j1..jm} · δ^{(i)}_{j1..jm}.
/// Its dual-norm sup reproduces the L_p Rademacher moment of y, and its
/// inner mixed sum reproduces the ℓ_2 norm of y.
MultilinearForm littlewood_form_construction(const CoefficientTensor& y, double p,
                                             const EnumerationOptions& options = {});

/// Ratio mixed_lhs_inner / form_norm for the construction above, against (A_p)^m.
InequalityReport equivalence_report(const CoefficientTensor& y, double p, const EnumerationOptions& options = {});

} // namespace khinlab
