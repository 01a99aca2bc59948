#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fingeo {

/// Process-wide cap on worker threads; 0 selects hardware_concurrency().
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Splits [0, n) into contiguous chunks, runs body(begin, end, acc) on each
/// chunk with a fresh accumulator and folds the partial results in chunk
/// order with merge(total, partial). The fold order is fixed, so any
/// associative merge yields the same answer for every worker count.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::size_t n, Acc init, Body body, Merge merge) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), n / 64 + 1));
    if (workers == 1) {
        Acc acc = init;
        body(std::size_t{0}, n, acc);
        return acc;
    }
    std::vector<Acc> partial(workers, init);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                const std::size_t begin = n * w / workers;
                const std::size_t end = n * (w + 1) / workers;
                try {
                    body(begin, end, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Acc total = init;
    for (auto& p : partial) merge(total, p);
    return total;
}

} // namespace fingeo
