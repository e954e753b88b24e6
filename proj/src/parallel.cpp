#include "mcwalk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mcwalk {

int max_worker_threads() {
    static const int cached = [] {
        const char* env = std::getenv("MULTICOIN_WALK_THREADS");
        long requested = 0;
        if (env != nullptr) requested = std::strtol(env, nullptr, 10);
        if (requested <= 0)
            requested = static_cast<long>(std::thread::hardware_concurrency());
        return static_cast<int>(std::max(1L, requested));
    }();
    return cached;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t min_chunk) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(
        static_cast<std::size_t>(max_worker_threads()),
        std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk)));
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& worker : pool) worker.join();
}

}  // namespace mcwalk
