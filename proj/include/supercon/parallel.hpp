#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace supercon {

// Worker-count policy: hardware concurrency, capped by the VERIFY_THREADS
// environment variable when set to a positive integer.
inline unsigned effective_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("VERIFY_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0 && static_cast<unsigned long>(cap) < n)
            n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs fn(i) for i in [0, count) across a small thread pool. Each index is
// claimed exactly once via an atomic counter; callers own any output slots,
// so results land in index order no matter how execution interleaves.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    unsigned threads = effective_thread_count();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned tIdx = 1; tIdx < threads; ++tIdx) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace supercon
