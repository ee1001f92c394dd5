#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace hlg {

/// out[i] = f(i) for i < n on up to `jobs` threads; results are index-ordered.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using T = std::invoke_result_t<F&, std::size_t>;
    std::vector<T> out(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n ? n : 1)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace hlg
