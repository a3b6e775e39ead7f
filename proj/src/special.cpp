#include "khinlab/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "khinlab/errors.hpp"

namespace khinlab {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Lanczos series A_g(x + 1) for the shifted argument.
double lanczos_series(double shifted)
{
    double a = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        a += kLanczosCoefficients[i] / (shifted + static_cast<double>(i));
    }
    return a;
}

void require_positive(double x, const char* name)
{
    if (!(x > 0.0)) {
        throw DomainError(std::string(name) + " requires x > 0, got " + std::to_string(x));
    }
}

} // namespace

double gamma(double x)
{
    require_positive(x, "gamma");
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    }
    const double shifted = x - 1.0;
    const double t = shifted + kLanczosG + 0.5;
    const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
    return sqrt_two_pi * std::pow(t, shifted + 0.5) * std::exp(-t) * lanczos_series(shifted);
}

double log_gamma(double x)
{
    require_positive(x, "log_gamma");
    if (x < 0.5) {
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double shifted = x - 1.0;
    const double t = shifted + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (shifted + 0.5) * std::log(t) - t +
           std::log(lanczos_series(shifted));
}

} // namespace khinlab
