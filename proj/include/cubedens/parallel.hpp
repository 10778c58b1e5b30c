#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace cubedens
{
    /// Worker count used when an operation is not given one explicitly; 1 unless changed.
    [[nodiscard]] auto default_threads() -> unsigned;
    auto set_default_threads(unsigned threads) -> void;

    /// Sums task(i) over i in [0, tasks). Integer addition makes the result independent
    /// of how tasks are split between workers.
    template <typename Task>
    [[nodiscard]] auto parallel_sum(std::size_t tasks, unsigned threads, Task && task) -> std::uint64_t
    {
        if (threads == 0)
            threads = default_threads();
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
        if (threads <= 1) {
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < tasks; ++i)
                total += task(i);
            return total;
        }

        std::atomic<std::size_t> next{0};
        std::vector<std::uint64_t> partial(threads, 0);
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < threads; ++w)
                workers.emplace_back([&, w] {
                    for (std::size_t i = next++; i < tasks; i = next++)
                        partial[w] += task(i);
                });
        }
        std::uint64_t total = 0;
        for (auto p : partial)
            total += p;
        return total;
    }
}
