#include "khinlab/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace khinlab {

std::string Exponent::to_string() const
{
    if (is_infinite()) {
        return "inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

Exponent conjugate_exponent(Exponent p)
{
    if (p.value() < 1.0) {
        throw DomainError("conjugate exponent requires p >= 1, got " + p.to_string());
    }
    if (p.is_infinite()) {
        return Exponent(1.0);
    }
    if (p.value() == 1.0) {
        return Exponent::infinity();
    }
    return Exponent(p.value() / (p.value() - 1.0));
}

Exponent parse_exponent(const std::string& text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "inf" || lower == "infinity") {
        return Exponent::infinity();
    }
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw DomainError("not a valid exponent: '" + text + "'");
    }
    return Exponent(value);
}

} // namespace khinlab
