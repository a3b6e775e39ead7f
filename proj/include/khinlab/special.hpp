#pragma once

namespace khinlab {

/// Gamma function for x > 0 (Lanczos approximation, g = 7, 9 terms).
/// Relative error below 1e-13 on (0.5, 2].
double gamma(double x);

/// log Γ(x) for x > 0, evaluated in log form so large arguments do not overflow.
double log_gamma(double x);

} // namespace khinlab
