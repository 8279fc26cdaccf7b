#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace simplicial {

/// Splits [0, n) into fixed blocks of `block_size` items and runs
/// fn(block_index, begin, end) for each block on up to `threads` workers.
///
/// The block layout depends only on n and block_size, never on the thread
/// count, so callers that reduce per-block partial results in block order
/// get bit-identical output for any number of threads.
template <typename Fn>
void for_each_block(std::size_t n, std::size_t block_size, unsigned threads, Fn&& fn)
{
    block_size = std::max<std::size_t>(block_size, 1);
    const std::size_t blocks = (n + block_size - 1) / block_size;
    auto run = [&](std::size_t b) {
        const std::size_t begin = b * block_size;
        fn(b, begin, std::min(n, begin + block_size));
    };
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) {
            run(b);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t b = next++; b < blocks; b = next++) {
                try {
                    run(b);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Thread count from the SIMPLICIAL_THREADS environment variable, or 1.
unsigned default_thread_count();

}  // namespace simplicial
