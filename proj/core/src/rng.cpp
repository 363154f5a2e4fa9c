#include "gmclab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace gmclab {

Engine make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    return Engine(seq);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GMCLAB_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

MomentEstimate sample_moment(std::span<const double> x, double k) {
    MomentEstimate m;
    const std::size_t n = x.size();
    if (n == 0) return m;
    // Welford, since x^k can be large and skewed
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = (k == 1.0) ? x[i] : std::pow(x[i], k);
        double d = v - mean;
        mean += d / double(i + 1);
        m2 += d * (v - mean);
    }
    m.value = mean;
    if (n > 1) m.std_error = std::sqrt(m2 / double(n - 1) / double(n));
    return m;
}

double ks_statistic(std::vector<double> x, std::vector<double> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    const double nx = double(x.size()), ny = double(y.size());
    while (i < x.size() && j < y.size()) {
        double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= v) ++i;
        while (j < y.size() && y[j] <= v) ++j;
        d = std::max(d, std::abs(i / nx - j / ny));
    }
    return d;
}

}  // namespace gmclab
