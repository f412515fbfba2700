#include "rootcensus/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rc {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace rc
