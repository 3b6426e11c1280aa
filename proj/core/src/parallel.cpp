#include "tcur/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace tcur {

namespace {

std::atomic<int> g_thread_override{0};

int resolve_threads() {
    int override = g_thread_override.load(std::memory_order_relaxed);
    if (override > 0) return override;
    if (const char* env = std::getenv("TCUR_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int num_threads() { return resolve_threads(); }

void set_num_threads(int n) { g_thread_override.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

void parallel_for(Index n, const std::function<void(Index)>& fn) {
    if (n <= 0) return;
    int workers = std::min<Index>(resolve_threads(), n);
    if (workers <= 1 || n == 1) {
        for (Index i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<Index> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto body = [&]() {
        for (;;) {
            Index i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();

    if (error) std::rethrow_exception(error);
}

} // namespace tcur
