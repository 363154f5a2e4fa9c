#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <span>
#include <thread>
#include <vector>

namespace gmclab {

using Engine = std::mt19937_64;

/// Engine for one (seed, stream, chunk) triple. Work is always split into
/// fixed-size chunks, so results do not depend on the thread count.
Engine make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk);

/// Threads to use: the explicit request if > 0, else GMCLAB_THREADS, else
/// the hardware concurrency.
int resolve_threads(int requested);

/// Runs f(chunk) for chunk = 0..nchunks-1 on up to `threads` threads.
template <class F>
void parallel_chunks(std::size_t nchunks, int threads, F&& f) {
    threads = resolve_threads(threads);
    if (threads <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) f(c);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads && t < static_cast<int>(nchunks); ++t) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < nchunks; c = next++) {
                try {
                    f(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Sample mean of x^k with its standard error.
MomentEstimate sample_moment(std::span<const double> x, double k);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> x, std::vector<double> y);

}  // namespace gmclab
