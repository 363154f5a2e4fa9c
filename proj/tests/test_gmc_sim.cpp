#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gmclab/errors.hpp"
#include "gmclab/gmc_sim.hpp"

using namespace gmclab;

TEST(FieldConfig, Validation) {
    EXPECT_THROW((FieldConfig{Geometry::circle, 1000}.validate()), DomainError);
    EXPECT_THROW((FieldConfig{Geometry::circle, 8}.validate()), DomainError);
    EXPECT_THROW((FieldConfig{Geometry::circle, 1024, -1.0}.validate()), DomainError);
    EXPECT_NO_THROW((FieldConfig{Geometry::interval, 1 << 16}.validate()));
}

TEST(Field, CirclePointVarianceIsHarmonicSum) {
    FieldGenerator g(FieldConfig{Geometry::circle, 1024});
    double h = 0.0;
    for (int k = 1; k <= 512; ++k) h += 1.0 / k;
    EXPECT_NEAR(g.point_variance(), 2.0 * h, 1e-12);
    EXPECT_NEAR(g.point_variance(), 13.63, 0.01);
}

TEST(Field, EmpiricalCovarianceWithinThreeSE) {
    for (auto geom : {Geometry::circle, Geometry::interval}) {
        FieldConfig cfg{geom, 64, geom == Geometry::interval ? 0.5 : 0.0, 3, 1};
        FieldGenerator g(cfg);
        auto fields = sample_field(cfg, 10000, 1);
        for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {5, 40}, {17, 18}, {63, 10}}) {
            double s = 0.0, s2 = 0.0;
            for (const auto& f : fields) {
                double x = f.values[i] * f.values[j];
                s += x;
                s2 += x * x;
            }
            double n = double(fields.size()), mean = s / n;
            double se = std::sqrt((s2 / n - mean * mean) / n);
            EXPECT_LT(std::abs(mean - g.covariance(i, j)), 3.0 * se) << to_string(geom) << " " << i << "," << j;
        }
    }
}

TEST(Field, CircleStationary) {
    FieldGenerator g(FieldConfig{Geometry::circle, 128});
    EXPECT_NEAR(g.covariance(0, 7), g.covariance(30, 37), 1e-12);
    // truncated series close to the log kernel away from the diagonal
    EXPECT_NEAR(g.covariance(0, 32), -2.0 * std::log(2.0 * std::sin(kPi * 0.25)), 0.05);
}

TEST(Field, Reproducible) {
    FieldConfig cfg{Geometry::circle, 256, 0.0, 9, 2};
    auto a = sample_field(cfg, 100, 1);
    auto b = sample_field(cfg, 100, 3);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].values, b[i].values);
}

TEST(Field, IntervalNeedsRegularization) {
    EXPECT_THROW(FieldGenerator(FieldConfig{Geometry::interval, 256, 0.0}), NumericalError);
    EXPECT_NO_THROW(FieldGenerator(FieldConfig{Geometry::interval, 256, 0.5}));
}

TEST(TotalMass, BetaZeroIsRiemannSum) {
    FieldConfig cfg{Geometry::interval, 1024, 0.5, 1, 0};
    auto f = sample_field(cfg, 1, 1).front();
    EXPECT_NEAR(total_mass(f, 0.0, 0.0, 0.0), 1.0, 1e-14);
    EXPECT_NEAR(total_mass(f, 0.0, 0.3, 0.7), std::beta(1.3, 1.7), 1e-3);
    EXPECT_THROW(total_mass(FieldSample{f.grid, f.values, FieldConfig{Geometry::circle, 1024}}, 0.5, 0.1, 0.2),
                 DomainError);
}

TEST(TotalMass, MonotoneInFieldValues) {
    FieldConfig cfg{Geometry::circle, 256, 0.0, 4, 0};
    auto f = sample_field(cfg, 1, 1).front();
    double m0 = total_mass(f, 0.5, 0.2, 0.2);
    for (int i : {3, 100, 200}) {
        auto g = f;
        g.values[i] += 0.1;
        EXPECT_GT(total_mass(g, 0.5, 0.2, 0.2), m0);
    }
}

TEST(MomentExperiment, OrderZeroAndRange) {
    FieldConfig cfg{Geometry::circle, 256, 0.0, 1, 0};
    auto r = moment_experiment(cfg, 0.5, 0, 0, {0}, 200, 1);
    EXPECT_EQ(r.estimates.at(0).value, 1.0);
    EXPECT_NEAR(r.estimates.at(0).std_error, 0.0, 1e-12);
    EXPECT_THROW(moment_experiment(cfg, 0.5, 0, 0, {4}, 10, 1), DomainError);
}

TEST(MomentExperiment, CircleMeanAndLambdaMean) {
    FieldConfig cfg{Geometry::circle, 1024, 0.0, 2, 0};
    auto r = moment_experiment(cfg, std::sqrt(0.2), 0.3, 0.3, {1}, 4000, 0);
    const auto& e = r.estimates.at(1);
    EXPECT_GT(e.std_error, 0.0);
    EXPECT_LT(std::abs(e.value - r.targets.at(1)), 3.0 * e.std_error + 2e-3);
}

TEST(Jackknife, MeanOfConstantAndLinear) {
    std::vector<double> x(1000, 2.0);
    auto e = jackknife_mean(x);
    EXPECT_EQ(e.value, 2.0);
    EXPECT_NEAR(e.std_error, 0.0, 1e-12);
    std::mt19937 gen(7);
    std::bernoulli_distribution coin(0.5);
    double mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = coin(gen) ? 1.0 : 0.0;
        mean += x[i] / double(x.size());
    }
    e = jackknife_mean(x);
    EXPECT_NEAR(e.value, mean, 1e-14);
    EXPECT_NEAR(e.std_error, 0.5 / std::sqrt(1000.0), 0.2 / std::sqrt(1000.0));
}

TEST(IPR, BetaZeroIsExact) {
    auto r = ipr_experiment(FieldConfig{Geometry::circle, 256}, 0.0, 2, 100, {64, 128, 256}, 1);
    for (std::size_t i = 0; i < r.sizes.size(); ++i)
        EXPECT_NEAR(r.ratios[i].value, 1.0 / r.sizes[i], 1e-14);
    EXPECT_NEAR(r.fitted_slope, -1.0, 1e-10);
    EXPECT_THROW(ipr_experiment(FieldConfig{Geometry::circle, 256}, 0.9, 2, 10, {64, 128}, 1), DomainError);
}

TEST(Maximum, ExceedsFixedPoint) {
    auto r = maximum_experiment(FieldConfig{Geometry::circle, 256, 0.0, 5, 0}, 200, {256, 512, 1024}, 1);
    for (const auto& q : r.quantiles) EXPECT_GE(q.front(), 0.0);
    EXPECT_EQ(r.increments.size(), 2u);
}
