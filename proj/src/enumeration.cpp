#include "khinlab/enumeration.hpp"

#include <string>

#include "khinlab/errors.hpp"

namespace khinlab {

void check_budget(std::size_t bits, int budget, const char* what)
{
    if (budget < 0 || bits > static_cast<std::size_t>(budget)) {
        throw BudgetExceeded(std::string(what) + " needs " + std::to_string(bits) +
                             " sign bits, budget is " + std::to_string(budget));
    }
    if (bits > 62) {
        throw BudgetExceeded(std::string(what) + ": sign words wider than 62 bits are not supported");
    }
}

} // namespace khinlab
