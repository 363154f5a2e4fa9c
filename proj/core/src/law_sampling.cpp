#include <cmath>
#include <random>
#include <sstream>

#include "gmclab/errors.hpp"
#include "gmclab/gmc_laws.hpp"
#include "gmclab/rng.hpp"

namespace gmclab {

namespace {

constexpr std::size_t kChunk = 65536;

struct Factor {
    BarnesBetaParams params;
    bool degenerate = false;  // b_1 = b_2 = 0 gives the constant 1
};

// Inverse Barnes beta factors together with the log of the constant.
struct Decomposition {
    double log_const = 0.0;
    double log_normal_var = 0.0;
    bool frechet = false;  // the Y factor, E[Y^q] = Gamma(1 - q/tau)
    std::vector<Factor> inverse_betas;
};

Decomposition decompose(const GMCLawParams& p) {
    p.validate();
    const double t = p.tau;
    double l1 = std::min(p.lambda1, p.lambda2), l2 = std::max(p.lambda1, p.lambda2);
    const double s = l1 + l2;
    Decomposition d;
    if (p.geometry == Geometry::circle) {
        d.log_const = std::log(t) / t - ln_gamma(1.0 - 1.0 / t);
        d.inverse_betas.push_back({{{1.0, t}, {t, 1.0 + t * l1, 1.0 + t * l2}}});
        d.inverse_betas.push_back({{{t}, {t * (s + 1.0) + 1.0}}});
        return d;
    }
    d.log_const = std::log(2.0 * kPi) - (3.0 * (1.0 + t) + 2.0 * t * s) / t * std::log(2.0) - ln_gamma(1.0 - 1.0 / t);
    d.log_normal_var = lognormal_variance(t);
    d.frechet = true;
    const double half_gap = t * (l2 - l1) / 2.0;
    d.inverse_betas.push_back({{{1.0, t}, {1.0 + t + t * l1, half_gap, half_gap}}, half_gap == 0.0});
    d.inverse_betas.push_back({{{1.0, t}, {1.0 + t + t * s / 2.0, 0.5, t / 2.0}}});
    const double b = (1.0 + t + t * s) / 2.0;
    d.inverse_betas.push_back({{{1.0, t}, {1.0 + t, b, b}}});
    return d;
}

}  // namespace

double lognormal_variance(double tau) { return 4.0 * std::log(2.0) / tau; }

cplx decomposition_log_mellin(cplx q, const GMCLawParams& p) {
    auto d = decompose(p);
    if (!(q.real() < p.tau)) throw DomainError("decomposition: need Re(q) < tau");
    cplx s = q * d.log_const + 0.5 * d.log_normal_var * q * q;
    for (const auto& f : d.inverse_betas)
        if (!f.degenerate) s += log_eta(f.params, -q);
    if (d.frechet) s += ln_gamma(1.0 - q / p.tau);
    return s;
}

SampleBatch law_sample(const GMCLawParams& p, std::size_t n, std::uint64_t seed, std::uint64_t stream,
                       int threads) {
    if (p.geometry == Geometry::circle && p.lambda1 != p.lambda2)
        throw DomainError("law_sample: the circle law is only defined for lambda1 = lambda2");
    auto d = decompose(p);
    std::ostringstream desc;
    desc.precision(17);
    desc << to_string(p.geometry) << " tau=" << p.tau << " lambda1=" << p.lambda1 << " lambda2=" << p.lambda2;
    SampleBatch batch;
    batch.seed = seed;
    batch.stream_id = stream;
    batch.count = n;
    batch.params = desc.str();
    batch.values.assign(n, std::exp(d.log_const));

    std::uint64_t sub = stream * 16;
    for (const auto& f : d.inverse_betas) {
        ++sub;
        if (f.degenerate) continue;
        auto b = barnes_beta_sample(f.params, n, seed, sub, threads);
        for (std::size_t i = 0; i < n; ++i) batch.values[i] /= b.values[i];
    }
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    const double sd = std::sqrt(d.log_normal_var), tau = p.tau;
    const std::uint64_t extra = sub + 1;
    parallel_chunks(nchunks, threads, [&](std::size_t chunk) {
        Engine eng = make_engine(seed, extra, chunk);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::exponential_distribution<double> expo(1.0);
        std::size_t end = std::min(n, (chunk + 1) * kChunk);
        for (std::size_t i = chunk * kChunk; i < end; ++i) {
            double x = 1.0;
            if (sd > 0.0) x *= std::exp(sd * normal(eng));
            if (d.frechet) x *= std::pow(expo(eng), -1.0 / tau);
            batch.values[i] *= x;
        }
    });
    return batch;
}

}  // namespace gmclab
