#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gmclab/gmc_laws.hpp"
#include "gmclab/rng.hpp"

namespace gmclab {

/// Discrete log-correlated field on N grid points, epsilon = 1/N.
/// Interval: dense covariance, -2 log|u - v| off the diagonal and
/// 2(kappa - log epsilon) on it. Circle: Fourier series cut at N/2, point
/// variance 2 H_{N/2} + 2 kappa.
struct FieldConfig {
    Geometry geometry = Geometry::circle;
    int N = 1024;
    double kappa = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    double epsilon() const { return 1.0 / N; }
    void validate() const;
    std::string hash() const;
};

struct FieldSample {
    std::vector<double> grid;
    std::vector<double> values;
    FieldConfig config;
};

/// Draws fields for one configuration. Construction factorizes the
/// covariance (interval) or plans the FFT (circle); draws are thread-safe.
class FieldGenerator {
public:
    explicit FieldGenerator(const FieldConfig& cfg);
    ~FieldGenerator();
    FieldGenerator(const FieldGenerator&) = delete;
    FieldGenerator& operator=(const FieldGenerator&) = delete;

    const FieldConfig& config() const { return cfg_; }
    const std::vector<double>& grid() const { return grid_; }
    /// Target variance at each grid point.
    double point_variance() const;
    /// Target covariance between grid points i and j.
    double covariance(int i, int j) const;

    /// Fills count fields (row-major, count x N) from one engine.
    void draw(Engine& eng, std::size_t count, std::span<double> out) const;

private:
    struct Impl;
    FieldConfig cfg_;
    std::vector<double> grid_;
    std::unique_ptr<Impl> impl_;
};

/// count fields, field i drawn from chunk i / 64 of (seed, stream).
std::vector<FieldSample> sample_field(const FieldConfig& cfg, std::size_t count, int threads = 0);

/// Riemann sum of phi(x_i) exp(beta V_i - beta^2 Var/2) dx. For the
/// interval with kappa = 0 the factor is exactly eps^{beta^2}.
double total_mass(std::span<const double> values, const std::vector<double>& grid, Geometry g,
                  double beta, double lambda1, double lambda2, double point_variance);
double total_mass(const FieldSample& field, double beta, double lambda1, double lambda2);

struct MCReport {
    std::map<double, MomentEstimate> estimates;  // order -> estimate
    std::map<double, double> targets;            // order -> closed form
    /// Orders >= 2 again, with the mass itself as control variate. Its
    /// mean is the Riemann sum of the potential, known exactly.
    std::map<double, MomentEstimate> controlled;
    std::size_t n_samples = 0;
    std::string config_hash;
    double wall_time = 0.0;
    std::vector<std::string> notes;
};

/// Jackknife estimate of the mean of x with 100 delete-a-group blocks.
MomentEstimate jackknife_mean(std::span<const double> x);

/// E[mass^k] for the requested orders, with the Selberg/Morris products
/// as targets. Orders must lie in [0, 1/beta^2).
MCReport moment_experiment(const FieldConfig& cfg, double beta, double lambda1, double lambda2,
                           const std::vector<int>& orders, std::size_t n_samples, int threads = 0);

struct IPRReport {
    int n = 2;
    double beta = 0.0;
    std::vector<int> sizes;
    std::vector<MomentEstimate> ratios;  // E[Z(n beta) / Z(beta)^n] per size
    std::vector<double> predicted;       // closed-form prediction per size
    double fitted_slope = 0.0;
    double slope_std_error = 0.0;
    double predicted_slope = 0.0;
    double prefactor = 0.0;            // fitted e^{intercept}
    double predicted_prefactor = 0.0;  // the gamma-function prefactor
    std::string note;
};

/// Circle IPR over the given sizes; fields share (seed, stream) with size
/// folded into the stream.
IPRReport ipr_experiment(const FieldConfig& base, double beta, int n, std::size_t n_samples,
                         const std::vector<int>& sizes = {256, 512, 1024, 2048, 4096}, int threads = 0);

struct MaxReport {
    std::vector<int> sizes;
    std::vector<MomentEstimate> mean_max;
    std::vector<std::vector<double>> quantiles;  // 10%, 50%, 90% per size
    std::vector<double> increments;              // mean max differences per doubling
    double coef_logN = 0.0;                      // a in a log N + b log log N + c
    double coef_loglogN = 0.0;
    std::string note;
};

/// Demo: maximum of V - V(x_0) against 2 log N - (3/2) log log N.
MaxReport maximum_experiment(const FieldConfig& base, std::size_t n_samples,
                             const std::vector<int>& sizes = {1024, 2048, 4096}, int threads = 0);

}  // namespace gmclab
