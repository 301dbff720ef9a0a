// Fork-join loop helper.  Thread count comes from FRACSTOKES_THREADS
// (0 or unset = one thread per hardware core).  Work is split into contiguous
// index chunks; each index is visited exactly once by exactly one thread, so
// any loop whose body writes only to its own slot produces output independent
// of the thread count.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fracstokes {

inline unsigned thread_count() {
    long requested = 0;
    if (const char* env = std::getenv("FRACSTOKES_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) requested = v;
        // 0, negative, or malformed fall through to auto
    }
    if (requested > 0) return static_cast<unsigned>(requested);
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <class F>
void parallel_for(std::size_t begin, std::size_t end, F&& fn) {
    if (end <= begin) return;
    std::size_t n = end - begin;
    std::size_t nt = std::min<std::size_t>(thread_count(), n);
    if (nt <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (std::size_t w = 0; w < nt; ++w) {
        std::size_t lo = begin + w * chunk;
        std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace fracstokes
