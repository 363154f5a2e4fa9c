#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gmclab/barnes_beta.hpp"
#include "gmclab/errors.hpp"
#include "gmclab/rng.hpp"
#include "sampling_detail.hpp"

namespace gmclab {

namespace detail {

InverseCdf::InverseCdf(const std::function<cplx(double)>& log_cf, double lo, double hi, int grid,
                       int max_nodes, double cf_floor) {
    if (!(hi > lo) || !std::isfinite(hi - lo)) throw NumericalError("Gil-Pelaez: bad range", hi - lo);
    const double width = hi - lo;
    // period 2 pi / h must exceed twice the tabulated range to avoid aliasing
    const double h = std::numbers::pi / width;
    std::vector<double> u;
    std::vector<cplx> phi;
    for (int k = 0; k < max_nodes; ++k) {
        double uk = (k + 0.5) * h;
        cplx v = std::exp(log_cf(uk));
        u.push_back(uk);
        phi.push_back(v);
        if (std::abs(v) < cf_floor && k > 16) break;
    }
    if (std::abs(phi.back()) > 1e-6)
        throw NumericalError("Gil-Pelaez: characteristic function has not decayed", std::abs(phi.back()));
    x_.resize(grid);
    f_.resize(grid);
    for (int j = 0; j < grid; ++j) {
        double xj = lo + width * j / (grid - 1);
        double s = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k)
            s += (std::exp(cplx(0.0, -u[k] * xj)) * phi[k]).imag() / u[k];
        x_[j] = xj;
        f_[j] = std::clamp(0.5 - h * s / std::numbers::pi, 0.0, 1.0);
    }
    for (int j = 1; j < grid; ++j) f_[j] = std::max(f_[j], f_[j - 1]);
}

double InverseCdf::quantile(double u) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), u);
    if (it == f_.begin()) return x_.front();
    if (it == f_.end()) return x_.back();
    std::size_t j = it - f_.begin();
    double f0 = f_[j - 1], f1 = f_[j];
    double w = (f1 > f0) ? (u - f0) / (f1 - f0) : 0.5;
    return x_[j - 1] + w * (x_[j] - x_[j - 1]);
}

}  // namespace detail

namespace {

constexpr std::size_t kChunk = 65536;

double phi_ratio(double t, const BarnesBetaParams& p, std::size_t skip) {
    double r = 1.0;
    for (std::size_t j = 1; j < p.b.size(); ++j)
        if (j != skip) r *= -std::expm1(-p.b[j] * t);
    for (double a : p.a) r /= -std::expm1(-a * t);
    return r;
}

double envelope_constant(const BarnesBetaParams& p) {
    double c = 1.0;
    for (int i = 0; i < p.M(); ++i) c *= std::max(1.0, p.b[i + 1] / p.a[i]);
    return c;
}

// -log beta for M < N: compound Poisson, jumps thinned from
// C e^{-b0 t}(1 - e^{-be t})/t = C int_{b0}^{b0+be} e^{-st} ds.
struct CompoundPoisson {
    const BarnesBetaParams& p;
    double c, be, ratio;
    std::poisson_distribution<long> count;

    explicit CompoundPoisson(const BarnesBetaParams& p_)
        : p(p_), c(envelope_constant(p_)), be(p_.b[p_.M() + 1]),
          ratio((p_.b[0] + be) / p_.b[0]), count(c * std::log(ratio)) {}

    double operator()(Engine& eng) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        long n = count(eng);
        double sum = 0.0;
        for (long k = 0; k < n; ++k) {
            double s = p.b[0] * std::pow(ratio, unif(eng));
            double t = std::exponential_distribution<double>(s)(eng);
            double accept = phi_ratio(t, p, p.M() + 1) / c;
            if (unif(eng) < accept) sum += t;
        }
        return sum;
    }
};

// -log beta for M = N: jumps above delta by thinning, the rest by their
// Gaussian approximation (mean Phi(0) delta, variance Phi(0) delta^2 / 2).
struct TruncatedLevy {
    static constexpr double delta = 1e-8;
    const BarnesBetaParams& p;
    double c, b0, cut, mass_lo, mass_hi, small_mean, small_sd;
    std::poisson_distribution<long> count;

    explicit TruncatedLevy(const BarnesBetaParams& p_)
        : p(p_), c(envelope_constant(p_)), b0(p_.b[0]), cut(std::max(1.0 / p_.b[0], 2 * delta)),
          mass_lo(c * std::log(cut / delta)), mass_hi(c * std::exp(-b0 * cut)),
          small_mean(0.0), small_sd(0.0), count(mass_lo + mass_hi) {
        double phi0 = 1.0;
        for (std::size_t j = 1; j < p.b.size(); ++j) phi0 *= p.b[j];
        for (double a : p.a) phi0 /= a;
        small_mean = phi0 * delta;
        small_sd = delta * std::sqrt(phi0 / 2.0);
    }

    // envelope: C/t on (delta, cut], C b0 e^{-b0 t} beyond (cut >= 1/b0)
    double operator()(Engine& eng) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        long n = count(eng);
        double sum = 0.0;
        for (long k = 0; k < n; ++k) {
            double t, g;
            if (unif(eng) * (mass_lo + mass_hi) < mass_lo) {
                t = delta * std::pow(cut / delta, unif(eng));
                g = c / t;
            } else {
                t = cut + std::exponential_distribution<double>(b0)(eng);
                g = c * b0 * std::exp(-b0 * t);
            }
            double nu = std::exp(-b0 * t) * phi_ratio(t, p, 0) / t;
            if (unif(eng) * g < nu) sum += t;
        }
        return sum + std::normal_distribution<double>(small_mean, small_sd)(eng);
    }
};

}  // namespace

SampleBatch barnes_beta_sample(const BarnesBetaParams& p, std::size_t n, std::uint64_t seed,
                               std::uint64_t stream, int threads) {
    p.validate();
    SampleBatch batch;
    batch.seed = seed;
    batch.stream_id = stream;
    batch.count = n;
    batch.params = p.describe();
    batch.values.resize(n);
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    auto run = [&](auto make_draw) {
        parallel_chunks(nchunks, threads, [&](std::size_t chunk) {
            Engine eng = make_engine(seed, stream, chunk);
            auto draw = make_draw();
            std::size_t end = std::min(n, (chunk + 1) * kChunk);
            for (std::size_t i = chunk * kChunk; i < end; ++i) batch.values[i] = draw(eng);
        });
    };

    if (p.variant() == BetaVariant::standard) {
        if (p.M() < p.N())
            run([&] { return [cp = CompoundPoisson(p)](Engine& e) mutable { return std::exp(-cp(e)); }; });
        else
            run([&] { return [tl = TruncatedLevy(p)](Engine& e) mutable { return std::exp(-tl(e)); }; });
        return batch;
    }

    if (p.M() == 1) {
        // Frechet: beta_{1,0}(a, b0) = (a G)^{1/a}, G ~ Gamma(b0 / a)
        const double a = p.a[0], shape = p.b[0] / a;
        run([&] {
            return [a, g = std::gamma_distribution<double>(shape, 1.0)](Engine& e) mutable {
                return std::pow(a * g(e), 1.0 / a);
            };
        });
        return batch;
    }

    const double eps = 1e-3 * std::min(1.0, p.b[0]);
    const double lp = log_eta(p, eps), lm = log_eta(p, -eps);
    const double mean = (lp - lm) / (2 * eps);
    const double var = (lp + lm) / (eps * eps);
    // the left tail of log beta decays like e^{b0 x}; the right tail faster
    // than any exponential
    const double sd = std::sqrt(std::max(var, 1e-12));
    const detail::InverseCdf table([&](double u) { return log_eta(p, cplx(0.0, u)); },
                                   mean - std::max(12.0 * sd, 36.0 / p.b[0]), mean + 12.0 * sd);
    run([&] {
        return [&table](Engine& e) {
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            return std::exp(table.quantile(unif(e)));
        };
    });
    return batch;
}

}  // namespace gmclab
