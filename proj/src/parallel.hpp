#pragma once

#include "khinlab/enumeration.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace khinlab::detail {

inline int worker_count(const EnumerationOptions& options)
{
    if (options.threads > 0) {
        return options.threads;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace khinlab::detail
