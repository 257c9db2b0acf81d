#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace plsurf {

// Execution settings threaded through the heavier operations. Results never
// depend on `threads`: work is split by index and written to per-index slots.
struct Exec {
    unsigned threads = 1;
};

// Calls fn(i) for i in [0, n). Work item i always writes its own output slot,
// so the caller assembles results in index order afterwards.
template <class Fn>
void parallel_for(std::size_t n, const Exec& exec, Fn&& fn)
{
    unsigned t = std::max(1u, exec.threads);
    if (t == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    t = static_cast<unsigned>(std::min<std::size_t>(t, n));
    std::vector<std::exception_ptr> errors(t);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += t)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace plsurf
