#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gmclab::detail {

/// CDF of a real random variable tabulated from its characteristic function
/// by the Gil-Pelaez formula, inverted by monotone interpolation.
class InverseCdf {
public:
    /// log_cf(u) = log E[exp(iuX)], tabulated on [lo, hi].
    InverseCdf(const std::function<std::complex<double>(double)>& log_cf, double lo, double hi,
               int grid = 8192, int max_nodes = 1 << 14, double cf_floor = 1e-10);

    double quantile(double u) const;
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& cdf() const { return f_; }

private:
    std::vector<double> x_;
    std::vector<double> f_;
};

}  // namespace gmclab::detail
