#include "gmclab/gmc_sim.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gmclab/errors.hpp"

namespace gmclab {

namespace {

constexpr std::size_t kFieldsPerChunk = 64;
constexpr int kDenseMax = 1 << 13;

// FFTW planning is not thread-safe.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

double harmonic(int n) {
    double h = 0.0;
    for (int k = n; k >= 1; --k) h += 1.0 / k;
    return h;
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void FieldConfig::validate() const {
    if (!is_pow2(N) || N < 16 || N > (1 << 16))
        throw DomainError("FieldConfig: N must be a power of two in [16, 2^16]");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("FieldConfig: kappa must be >= 0");
}

std::string FieldConfig::hash() const {
    std::ostringstream s;
    s << to_string(geometry) << ':' << N << ':' << kappa << ':' << seed << ':' << stream;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(s.str()));
    return buf;
}

// -- generator ----------------------------------------------------------------

struct FieldGenerator::Impl {
    // circle
    std::vector<double> amp;  // sqrt(2/k) (-1)^k, k = 0..N/2
    double nugget = 0.0;      // sd of the per-point top-up
    // interval, dense
    Eigen::MatrixXd L;
    // interval, circulant embedding of size 2N
    std::vector<double> sqrt_eig;
};

FieldGenerator::FieldGenerator(const FieldConfig& cfg) : cfg_(cfg), impl_(std::make_unique<Impl>()) {
    cfg_.validate();
    const int N = cfg_.N;
    grid_.resize(N);
    if (cfg_.geometry == Geometry::circle) {
        for (int j = 0; j < N; ++j) grid_[j] = -0.5 + double(j) / N;
        // kappa enters as independent per-point noise of variance 2 kappa
        const int K = N / 2;
        impl_->amp.assign(K + 1, 0.0);
        for (int k = 1; k <= K; ++k) impl_->amp[k] = std::sqrt(2.0 / k) * ((k & 1) ? -1.0 : 1.0);
        impl_->nugget = std::sqrt(2.0 * cfg_.kappa);
        return;
    }
    for (int j = 0; j < N; ++j) grid_[j] = (j + 0.5) / N;
    if (N <= kDenseMax) {
        Eigen::MatrixXd C(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) C(i, j) = covariance(i, j);
        Eigen::LLT<Eigen::MatrixXd> llt(C);
        if (llt.info() != Eigen::Success)
            throw NumericalError("FieldGenerator: covariance is not positive definite; increase kappa");
        impl_->L = llt.matrixL();
        return;
    }
    // circulant embedding: first row r_0..r_{N-1}, r_N, r_{N-1}..r_1
    const int M = 2 * N;
    std::vector<double> c(M);
    for (int k = 0; k <= N; ++k) {
        double r = (k == 0) ? point_variance() : -2.0 * std::log(double(k) / N);
        c[k] = r;
        if (k > 0 && k < N) c[M - k] = r;
    }
    std::vector<std::complex<double>> spec(M / 2 + 1);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_plan plan = fftw_plan_dft_r2c_1d(M, c.data(), reinterpret_cast<fftw_complex*>(spec.data()),
                                              FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    impl_->sqrt_eig.assign(M, 0.0);
    double lmax = 0.0;
    for (auto& z : spec) lmax = std::max(lmax, z.real());
    for (int k = 0; k < M; ++k) {
        double lam = spec[std::min(k, M - k)].real();
        if (lam < -1e-9 * lmax)
            throw NumericalError("FieldGenerator: circulant embedding is not nonnegative; increase kappa");
        impl_->sqrt_eig[k] = std::sqrt(std::max(lam, 0.0) / M);
    }
}

FieldGenerator::~FieldGenerator() = default;

double FieldGenerator::point_variance() const {
    if (cfg_.geometry == Geometry::circle) return 2.0 * (cfg_.kappa + harmonic(cfg_.N / 2));
    return 2.0 * (cfg_.kappa + std::log(double(cfg_.N)));
}

double FieldGenerator::covariance(int i, int j) const {
    if (i == j) return point_variance();
    if (cfg_.geometry == Geometry::interval) return -2.0 * std::log(std::abs(grid_[i] - grid_[j]));
    // the truncated series, which is what the synthesis realizes
    const int K = cfg_.N / 2;
    const int d = std::abs(i - j);
    double s = 0.0;
    for (int k = 1; k < K; ++k) s += 2.0 / k * std::cos(2.0 * std::numbers::pi * k * d / cfg_.N);
    return s + 2.0 / K * ((d & 1) ? -1.0 : 1.0);
}

void FieldGenerator::draw(Engine& eng, std::size_t count, std::span<double> out) const {
    const int N = cfg_.N;
    if (out.size() < count * std::size_t(N)) throw DomainError("FieldGenerator::draw: output too small");
    std::normal_distribution<double> normal;

    if (cfg_.geometry == Geometry::circle) {
        const int K = N / 2;
        std::vector<std::complex<double>> in(K + 1);
        std::vector<double> buf(N);
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(fftw_mutex());
            plan = fftw_plan_dft_c2r_1d(N, reinterpret_cast<fftw_complex*>(in.data()), buf.data(),
                                        FFTW_ESTIMATE);
        }
        for (std::size_t f = 0; f < count; ++f) {
            // c2r computes X_0 + 2 Re sum_{k<K} X_k e^{2 pi i jk/N} + X_K (-1)^j
            in[0] = 0.0;
            for (int k = 1; k <= K; ++k) {
                double a = normal(eng), b = normal(eng);
                in[k] = (k < K) ? 0.5 * impl_->amp[k] * std::complex<double>(a, -b)
                                : std::complex<double>(impl_->amp[k] * a, 0.0);
            }
            fftw_execute(plan);
            double* dst = out.data() + f * N;
            for (int j = 0; j < N; ++j) dst[j] = buf[j] + impl_->nugget * normal(eng);
        }
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
        return;
    }

    if (impl_->L.size() > 0) {
        Eigen::MatrixXd Z(N, Eigen::Index(count));
        for (std::size_t f = 0; f < count; ++f)
            for (int j = 0; j < N; ++j) Z(j, Eigen::Index(f)) = normal(eng);
        Eigen::Map<Eigen::MatrixXd> V(out.data(), N, Eigen::Index(count));
        V.noalias() = impl_->L.triangularView<Eigen::Lower>() * Z;
        return;
    }

    // circulant embedding: real and imaginary parts are two independent fields
    const int M = 2 * N;
    std::vector<std::complex<double>> w(M);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft_1d(M, reinterpret_cast<fftw_complex*>(w.data()),
                                reinterpret_cast<fftw_complex*>(w.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t f = 0; f < count; f += 2) {
        for (int k = 0; k < M; ++k) {
            double a = normal(eng), b = normal(eng);
            w[k] = impl_->sqrt_eig[k] * std::complex<double>(a, b);
        }
        fftw_execute(plan);
        double* dst = out.data() + f * N;
        for (int j = 0; j < N; ++j) dst[j] = w[j].real();
        if (f + 1 < count)
            for (int j = 0; j < N; ++j) dst[N + j] = w[j].imag();
    }
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_destroy_plan(plan);
}

// -- sampling and mass -----------------------------------------------------------

namespace {

template <class F>
void for_each_chunk(const FieldGenerator& gen, std::size_t n, int threads, F&& fn) {
    const std::size_t nchunks = (n + kFieldsPerChunk - 1) / kFieldsPerChunk;
    const int N = gen.config().N;
    parallel_chunks(nchunks, threads, [&](std::size_t c) {
        const std::size_t begin = c * kFieldsPerChunk;
        const std::size_t count = std::min(kFieldsPerChunk, n - begin);
        std::vector<double> buf(count * N);
        Engine eng = make_engine(gen.config().seed, gen.config().stream, c);
        gen.draw(eng, count, buf);
        for (std::size_t f = 0; f < count; ++f)
            fn(begin + f, std::span<const double>(buf.data() + f * N, N));
    });
}

std::vector<double> potential(const std::vector<double>& grid, Geometry g, double l1, double l2) {
    std::vector<double> phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double x = grid[i];
        if (g == Geometry::interval) {
            phi[i] = std::pow(x, l1) * std::pow(1.0 - x, l2);
        } else {
            double m = std::abs(2.0 * std::cos(std::numbers::pi * x));
            phi[i] = (l1 + l2 == 0.0) ? 1.0 : std::pow(m, l1 + l2);
        }
    }
    return phi;
}

void check_potential(Geometry g, double l1, double l2) {
    if (l1 < 0.0 || l2 < 0.0) throw DomainError("total_mass: lambda must be >= 0");
    if (g == Geometry::circle && l1 != l2)
        throw DomainError("total_mass: the circle potential is real only for lambda1 = lambda2");
}

double mass_with(std::span<const double> v, const std::vector<double>& phi, double beta, double var) {
    const double shift = 0.5 * beta * beta * var;
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += phi[i] * std::exp(beta * v[i] - shift);
    return s / double(v.size());
}

}  // namespace

std::vector<FieldSample> sample_field(const FieldConfig& cfg, std::size_t count, int threads) {
    FieldGenerator gen(cfg);
    std::vector<FieldSample> out(count);
    for_each_chunk(gen, count, threads, [&](std::size_t i, std::span<const double> v) {
        out[i].grid = gen.grid();
        out[i].values.assign(v.begin(), v.end());
        out[i].config = gen.config();
    });
    return out;
}

double total_mass(std::span<const double> values, const std::vector<double>& grid, Geometry g, double beta,
                  double lambda1, double lambda2, double point_variance) {
    check_potential(g, lambda1, lambda2);
    if (values.size() != grid.size()) throw DomainError("total_mass: size mismatch");
    return mass_with(values, potential(grid, g, lambda1, lambda2), beta, point_variance);
}

double total_mass(const FieldSample& field, double beta, double lambda1, double lambda2) {
    const auto& c = field.config;
    const double var = 2.0 * (c.kappa + (c.geometry == Geometry::circle ? harmonic(c.N / 2) : std::log(double(c.N))));
    return total_mass(field.values, field.grid, field.config.geometry, beta, lambda1, lambda2, var);
}

MomentEstimate jackknife_mean(std::span<const double> x) {
    const std::size_t n = x.size();
    MomentEstimate m;
    if (n == 0) return m;
    double total = 0.0;
    for (double v : x) total += v;
    m.value = total / double(n);
    const std::size_t G = std::min<std::size_t>(100, n);
    if (G < 2) return m;
    std::vector<double> loo(G);
    double mean_loo = 0.0;
    for (std::size_t g = 0; g < G; ++g) {
        std::size_t lo = g * n / G, hi = (g + 1) * n / G;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i];
        loo[g] = (total - s) / double(n - (hi - lo));
        mean_loo += loo[g] / double(G);
    }
    double ss = 0.0;
    for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
    m.std_error = std::sqrt(double(G - 1) / double(G) * ss);
    return m;
}

MCReport moment_experiment(const FieldConfig& cfg, double beta, double lambda1, double lambda2,
                           const std::vector<int>& orders, std::size_t n_samples, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    if (!(beta > 0.0)) throw DomainError("moment_experiment: beta must be > 0");
    check_potential(cfg.geometry, lambda1, lambda2);
    const GMCLawParams law{cfg.geometry, 1.0 / (beta * beta), lambda1, lambda2};
    for (int k : orders)
        if (k < 0 || k >= law.tau) throw DomainError("moment_experiment: orders must lie in [0, 1/beta^2)");

    FieldGenerator gen(cfg);
    const auto phi = potential(gen.grid(), cfg.geometry, lambda1, lambda2);
    const double var = gen.point_variance();
    std::vector<double> mass(n_samples);
    for_each_chunk(gen, n_samples, threads,
                   [&](std::size_t i, std::span<const double> v) { mass[i] = mass_with(v, phi, beta, var); });

    MCReport r;
    r.n_samples = n_samples;
    r.config_hash = cfg.hash();
    double mu = 0.0;
    for (double f : phi) mu += f / double(phi.size());
    double mbar = 0.0, var_m = 0.0;
    for (double m : mass) mbar += m / double(n_samples);
    for (double m : mass) var_m += (m - mbar) * (m - mbar);
    std::vector<double> xk(n_samples);
    for (int k : orders) {
        for (std::size_t i = 0; i < n_samples; ++i) xk[i] = std::pow(mass[i], k);
        r.estimates[k] = jackknife_mean(xk);
        if (k >= 2 && var_m > 0.0) {
            double xbar = r.estimates[k].value, cov = 0.0;
            for (std::size_t i = 0; i < n_samples; ++i) cov += (xk[i] - xbar) * (mass[i] - mbar);
            const double c = cov / var_m;
            std::vector<double> y(n_samples);
            for (std::size_t i = 0; i < n_samples; ++i) y[i] = xk[i] - c * (mass[i] - mu);
            r.controlled[k] = jackknife_mean(y);
        }
        r.targets[k] = k == 0 ? 1.0
                              : cfg.geometry == Geometry::interval ? selberg_moment_product(k, law)
                                                                   : morris_moment_product(k, law);
    }
    r.notes.push_back("mass normalized by exp(-beta^2 Var/2) with the realized point variance");
    r.wall_time = elapsed(t0);
    return r;
}

namespace {

struct LineFit {
    double slope = 0.0, intercept = 0.0, slope_se = 0.0;
};

LineFit weighted_fit(const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& se) {
    const Eigen::Index n = Eigen::Index(x.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double w = se[i] > 0.0 ? 1.0 / se[i] : 1.0;
        A(i, 0) = w * x[i];
        A(i, 1) = w;
        b(i) = w * y[i];
    }
    Eigen::Matrix2d AtA = A.transpose() * A;
    Eigen::Vector2d sol = AtA.ldlt().solve(A.transpose() * b);
    LineFit f;
    f.slope = sol(0);
    f.intercept = sol(1);
    f.slope_se = std::sqrt(AtA.inverse()(0, 0));
    return f;
}

}  // namespace

IPRReport ipr_experiment(const FieldConfig& base, double beta, int n, std::size_t n_samples,
                         const std::vector<int>& sizes, int threads) {
    if (base.geometry != Geometry::circle) throw DomainError("ipr_experiment: circle geometry only");
    if (!(beta >= 0.0) || n < 1) throw DomainError("ipr_experiment: need beta >= 0 and n >= 1");
    if (beta > 0.0 && !(n < (1.0 + beta * beta) / (2.0 * beta * beta)))
        throw DomainError("ipr_experiment: need n < (1 + beta^2) / (2 beta^2)");
    if (sizes.size() < 2) throw DomainError("ipr_experiment: need at least two sizes");
    IPRReport r;
    r.n = n;
    r.beta = beta;
    r.sizes = sizes;
    r.predicted_slope = ipr_exponent(n, beta);
    // beta = 0: every ratio is N^{1-n}
    auto log_pred = [&](double N) { return beta > 0.0 ? log_ipr_ratio(n, beta, N) : (1.0 - n) * std::log(N); };
    r.predicted_prefactor = std::exp(log_pred(1.0));

    std::vector<double> x, y, se;
    for (int N : sizes) {
        FieldConfig cfg = base;
        cfg.N = N;
        cfg.stream = base.stream * 64 + std::uint64_t(std::countr_zero(unsigned(N)));
        FieldGenerator gen(cfg);
        std::vector<double> ratio(n_samples);
        for_each_chunk(gen, n_samples, threads, [&](std::size_t i, std::span<const double> v) {
            // Z(n beta) / Z(beta)^n with the max factored out
            double vmax = *std::max_element(v.begin(), v.end());
            double z1 = 0.0, zn = 0.0;
            for (double t : v) {
                z1 += std::exp(beta * (t - vmax));
                zn += std::exp(n * beta * (t - vmax));
            }
            ratio[i] = zn / std::pow(z1, n);
        });
        MomentEstimate e = jackknife_mean(ratio);
        r.ratios.push_back(e);
        r.predicted.push_back(std::exp(log_pred(double(N))));
        x.push_back(std::log(double(N)));
        y.push_back(std::log(e.value));
        se.push_back(e.std_error / e.value);
    }
    LineFit fit = weighted_fit(x, y, se);
    r.fitted_slope = fit.slope;
    r.slope_std_error = fit.slope_se;
    r.prefactor = std::exp(fit.intercept);
    return r;
}

MaxReport maximum_experiment(const FieldConfig& base, std::size_t n_samples, const std::vector<int>& sizes,
                             int threads) {
    MaxReport r;
    r.sizes = sizes;
    std::vector<double> mean;
    for (int N : sizes) {
        FieldConfig cfg = base;
        cfg.N = N;
        cfg.stream = base.stream * 64 + std::uint64_t(std::countr_zero(unsigned(N)));
        FieldGenerator gen(cfg);
        std::vector<double> mx(n_samples);
        for_each_chunk(gen, n_samples, threads, [&](std::size_t i, std::span<const double> v) {
            double m = -INFINITY;
            for (double t : v) m = std::max(m, t - v[0]);
            mx[i] = m;
        });
        r.mean_max.push_back(jackknife_mean(mx));
        mean.push_back(r.mean_max.back().value);
        std::vector<double> s = mx;
        std::sort(s.begin(), s.end());
        std::vector<double> q;
        for (double p : {0.1, 0.5, 0.9}) q.push_back(s[std::min(s.size() - 1, std::size_t(p * s.size()))]);
        r.quantiles.push_back(q);
    }
    for (std::size_t i = 1; i < mean.size(); ++i) r.increments.push_back(mean[i] - mean[i - 1]);
    if (sizes.size() >= 3) {
        const Eigen::Index m = Eigen::Index(sizes.size());
        Eigen::MatrixXd A(m, 3);
        Eigen::VectorXd b(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            double L = std::log(double(sizes[i]));
            A(i, 0) = L;
            A(i, 1) = std::log(L);
            A(i, 2) = 1.0;
            b(i) = mean[i];
        }
        Eigen::Vector3d c = A.colPivHouseholderQr().solve(b);
        r.coef_logN = c(0);
        r.coef_loglogN = c(1);
    }
    r.note = "demo only; expected a = 2, b = -3/2 with slow convergence";
    return r;
}

}  // namespace gmclab
