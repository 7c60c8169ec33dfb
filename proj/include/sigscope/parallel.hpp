#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigscope {

// Effective thread cap: min(hardware, SIGSCOPE_THREADS if set and positive).
// Read once; every parallel region in the library is bounded by this value.
int max_threads();

// Apply the cap process-wide. Call from main() before any parallel work.
void configure_threads();

}
