#pragma once

#include <cstdlib>
#include <thread>

namespace dcr::detail {

// Worker budget: explicit request wins, then DCR_THREADS, then the hardware.
inline int thread_budget(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DCR_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace dcr::detail
