#include "frontlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frontlab {

namespace {
int g_cap = 0;
}

void set_worker_cap(int n) { g_cap = n; }

int worker_count() {
    if (g_cap > 0) return g_cap;
    if (const char* env = std::getenv("FRONTLAB_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    int workers = worker_count();
    if (workers <= 1 || n < 2048) {
        body(0, n);
        return;
    }
    std::size_t nw = std::min<std::size_t>(workers, n);
    std::size_t chunk = (n + nw - 1) / nw;
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace frontlab
