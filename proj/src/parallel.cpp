#include "qnl/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qnl {

int default_thread_count() {
    if (const char* env = std::getenv("QNL_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

} // namespace qnl
