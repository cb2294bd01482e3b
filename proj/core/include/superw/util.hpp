#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace superw {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (bad sizes, odd N where 2n required, ...).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A Poisson bracket was requested for a generator pair outside the table domain.
struct UncoveredPairError : Error {
    explicit UncoveredPairError(const std::string& what) : Error(what) {}
};

/// Worker count: min(hardware, 8), overridable by SUPERW_THREADS (>=1).
inline int thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
    if (const char* env = std::getenv("SUPERW_THREADS")) {
        int req = std::atoi(env);
        if (req >= 1) n = req;
    }
    return n;
}

/// Runs fn(i) for i in [0,n); results land in slot i, so the output is
/// identical for any worker count.
template <typename R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    int workers = thread_count();
    if (workers <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, &out, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace superw
