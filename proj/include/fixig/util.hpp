#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fixig {

inline constexpr std::uint64_t bit_of(int v) { return std::uint64_t{1} << v; }

inline int lowest_set(std::uint64_t m) { return std::countr_zero(m); }

// Deterministic parallel map: results are indexed by input position, so the
// output is identical for any worker count.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& fn)
    -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());
    if (jobs <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load()) return;
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n_workers = std::min<int>(jobs, static_cast<int>(items.size()));
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

// Lexicographic k-subsets of {0..n-1}. Returns false when exhausted.
inline bool first_combination(std::vector<int>& c, int n, int k) {
    if (k > n) return false;
    c.resize(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return true;
}

inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace fixig
