#pragma once

#include "khinlab/exponent.hpp"

namespace khinlab {

enum class HaagerupBranch { Flat, Gaussian, Dyadic };

const char* to_string(HaagerupBranch branch);

/// Optimal Khintchine constant A_p together with the formula branch used.
struct HaagerupConstant {
    Exponent p;
    double value;
    HaagerupBranch branch;
};

/// The breakpoint p0 where Γ((p0+1)/2) = √π/2.
struct Breakpoint {
    double p0;
    double residual; ///< |Γ((p0+1)/2) − √π/2|
};

/// Bisection on [1.8, 1.9]. Stops once both the residual and the bracket
/// width are within `tolerance` (which must be ≥ 1e-14).
Breakpoint solve_p0(double tolerance);

/// p0 solved once at tolerance 1e-12; every branch decision uses this value.
const Breakpoint& cached_breakpoint();

/// Dyadic branch 2^{1/p − 1/2}.
double haagerup_dyadic_formula(double p);
/// Gaussian branch (1/√2)·(Γ((p+1)/2)/√π)^{−1/p}.
double haagerup_gaussian_formula(double p);

/// A_p: 1 for p ≥ 2, the Gaussian formula on (p0, 2), the dyadic formula on (0, p0].
HaagerupConstant haagerup_constant(Exponent p);

/// Limit of the normalized L_r moment of a normalized Rademacher sum as the
/// number of terms grows: √2·(Γ((r+1)/2)/√π)^{1/r}, the Gaussian L_r norm.
double gaussian_moment_limit(double r);

/// K_{m,r} = (A_r)^m.
double multiple_khintchine_constant(int m, double r);

/// C_{(M),p} = (A_{p*})^{M−1} for p ≥ 2.
double mixed_littlewood_constant(int M, Exponent p);

} // namespace khinlab
