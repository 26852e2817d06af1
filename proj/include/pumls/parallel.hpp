#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <thread>
#include <vector>

namespace pumls {

inline std::size_t parallel_chunk_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Splits [0, n) into one contiguous range per hardware thread and runs
// body(chunk_index, begin, end) on each. Body must only touch per-chunk state.
template <typename Body>
void parallel_for(Eigen::Index n, Body&& body) {
    const std::size_t chunks = parallel_chunk_count();
    if (chunks <= 1 || n < 256) {
        body(std::size_t{0}, Eigen::Index{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    const Eigen::Index step = (n + static_cast<Eigen::Index>(chunks) - 1) /
                              static_cast<Eigen::Index>(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const Eigen::Index begin = static_cast<Eigen::Index>(c) * step;
        const Eigen::Index end = std::min(n, begin + step);
        if (begin >= end) break;
        threads.emplace_back([&body, c, begin, end] { body(c, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace pumls
