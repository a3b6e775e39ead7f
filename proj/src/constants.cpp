#include "khinlab/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "khinlab/special.hpp"

namespace khinlab {

namespace {

const double kHalfSqrtPi = std::sqrt(std::numbers::pi) / 2.0;

double p0_residual(double p) { return gamma((p + 1.0) / 2.0) - kHalfSqrtPi; }

} // namespace

const char* to_string(HaagerupBranch branch)
{
    switch (branch) {
    case HaagerupBranch::Flat:
        return "flat";
    case HaagerupBranch::Gaussian:
        return "gaussian";
    case HaagerupBranch::Dyadic:
        return "dyadic";
    }
    return "?";
}

Breakpoint solve_p0(double tolerance)
{
    if (!(tolerance >= 1e-14)) {
        throw DomainError("solve_p0 requires tolerance >= 1e-14");
    }
    // The residual is positive at 1.8 and negative at 1.9.
    double lo = 1.8;
    double hi = 1.9;
    double mid = 0.5 * (lo + hi);
    double residual = p0_residual(mid);
    while (std::abs(residual) > tolerance || hi - lo > tolerance) {
        if (residual == 0.0) {
            break;
        }
        if (residual > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        if (next == lo || next == hi) {
            break;
        }
        mid = next;
        residual = p0_residual(mid);
    }
    return Breakpoint{mid, std::abs(residual)};
}

const Breakpoint& cached_breakpoint()
{
    static const Breakpoint breakpoint = solve_p0(1e-12);
    return breakpoint;
}

double haagerup_dyadic_formula(double p) { return std::exp2(1.0 / p - 0.5); }

double haagerup_gaussian_formula(double p)
{
    const double ratio = gamma((p + 1.0) / 2.0) / std::sqrt(std::numbers::pi);
    return std::pow(ratio, -1.0 / p) / std::numbers::sqrt2;
}

HaagerupConstant haagerup_constant(Exponent p)
{
    const double v = p.value();
    if (v >= 2.0) {
        return {p, 1.0, HaagerupBranch::Flat};
    }
    if (v > cached_breakpoint().p0) {
        return {p, haagerup_gaussian_formula(v), HaagerupBranch::Gaussian};
    }
    return {p, haagerup_dyadic_formula(v), HaagerupBranch::Dyadic};
}

double gaussian_moment_limit(double r)
{
    if (!(r > 0.0 && r < 2.0)) {
        throw DomainError("gaussian_moment_limit requires 0 < r < 2, got " + std::to_string(r));
    }
    const double ratio = gamma((r + 1.0) / 2.0) / std::sqrt(std::numbers::pi);
    return std::numbers::sqrt2 * std::pow(ratio, 1.0 / r);
}

double multiple_khintchine_constant(int m, double r)
{
    if (m < 1) {
        throw DomainError("multiple_khintchine_constant requires m >= 1");
    }
    return std::pow(haagerup_constant(r).value, m);
}

double mixed_littlewood_constant(int M, Exponent p)
{
    if (M < 2) {
        throw DomainError("mixed_littlewood_constant requires M >= 2");
    }
    if (p.value() < 2.0) {
        throw DomainError("mixed_littlewood_constant requires p >= 2, got " + p.to_string());
    }
    return std::pow(haagerup_constant(conjugate_exponent(p)).value, M - 1);
}

} // namespace khinlab
