#include "ringdet/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringdet::parallel {

namespace {
int g_max_threads = 0; // 0 = runtime default
}

void set_max_threads(int n) { g_max_threads = n > 0 ? n : 0; }

int max_threads() {
#ifdef _OPENMP
    return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace ringdet::parallel
