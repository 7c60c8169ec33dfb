#include "sigscope/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sigscope {

static int read_thread_cap() {
#ifdef _OPENMP
    int cap = omp_get_max_threads();
#else
    int cap = 1;
#endif
    if (const char* env = std::getenv("SIGSCOPE_THREADS")) {
        try {
            int requested = std::stoi(env);
            if (requested >= 1 && requested < cap) cap = requested;
        } catch (...) {
            // unparsable value: keep hardware default
        }
    }
    return cap < 1 ? 1 : cap;
}

int max_threads() {
    static const int cap = read_thread_cap();
    return cap;
}

void configure_threads() {
#ifdef _OPENMP
    omp_set_num_threads(max_threads());
#endif
}

}
