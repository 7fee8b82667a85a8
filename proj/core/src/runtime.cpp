#include "mincut/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace mincut {

std::size_t worker_count() {
    std::size_t count = 0;
    if (const char* env = std::getenv("MINCUT_THREADS")) {
        try {
            count = std::stoul(env);
        } catch (...) {
            count = 0;
        }
    }
    if (count == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        count = hw == 0 ? 1 : hw;
    }
    return count;
}

}  // namespace mincut
