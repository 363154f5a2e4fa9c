#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gmclab/barnes_beta.hpp"
#include "gmclab/rng.hpp"

using namespace gmclab;

namespace {
const BarnesBetaParams kB22{{1.0, 2.0}, {1.0, 1.0, 1.0}};
}

TEST(BarnesBeta, ClosedFormMeans) {
    EXPECT_NEAR(std::exp(log_eta(kB22, 1.0)), 2.0 / kPi, 1e-13);
    BarnesBetaParams b10{{2.0}, {2.0}};
    EXPECT_NEAR(std::exp(log_eta(b10, 1.0)), std::sqrt(kPi / 2.0), 1e-13);
    EXPECT_EQ(log_eta(kB22, 0.0), 0.0);
}

TEST(BarnesBeta, ValidationErrors) {
    EXPECT_THROW((BarnesBetaParams{{1.0, 2.0}, {1.0}}.validate()), DomainError);  // N < M - 1
    EXPECT_THROW((BarnesBetaParams{{-1.0}, {1.0, 1.0}}.validate()), DomainError);
    EXPECT_THROW(log_eta(kB22, -1.5), DomainError);  // Re q <= -b0
}

TEST(BarnesBeta, SOperatorPolynomialIdentities) {
    std::vector<double> b{0.3, 0.7, 1.1, 0.4};
    for (int n = 0; n < 3; ++n)
        EXPECT_NEAR(s_operator<double>([&](double x) { return std::pow(x, n); }, 0.37, std::span<const double>(b)), 0.0, 1e-13);
    double v = s_operator<double>([](double x) { return x * x * x; }, 0.37, std::span<const double>(b));
    EXPECT_NEAR(v, -6.0 * 0.7 * 1.1 * 0.4, 1e-13);
}

TEST(BarnesBeta, LevyKhinchineAgrees) {
    EXPECT_NEAR(std::abs(levy_khinchine_log_eta(kB22, 0.7) - log_eta(kB22, cplx(0.7))), 0.0, 1e-10);
    BarnesBetaParams g{{1.0, 2.0}, {0.5, 0.4}};
    cplx q(0.4, 1.3);
    EXPECT_NEAR(std::abs(levy_khinchine_log_eta(g, q) - log_eta(g, q)), 0.0, 1e-10);
}

TEST(BarnesBeta, AtomMass) {
    BarnesBetaParams p{{}, {2.0, 1.0}};
    EXPECT_NEAR(atom_mass_closed(p), 2.0 / 3.0, 1e-15);
    BarnesBetaParams q{{1.0}, {0.5, 1.0, 2.0}};
    EXPECT_NEAR(atom_mass_integral(q), atom_mass_closed(q), 1e-10);
}

TEST(BarnesBeta, MomentFormulas) {
    for (int k = 1; k <= 3; ++k) EXPECT_NEAR(barnes_beta_moment(kB22, k, 1), std::exp(log_eta(kB22, double(k))), 1e-12);
    BarnesBetaParams pn{{1.0, 2.0}, {2.5, 1.0, 1.0}};
    EXPECT_NEAR(barnes_beta_moment(pn, 2, -1), std::exp(log_eta(pn, -2.0)), 1e-12);
}

TEST(BarnesBeta, Factorizations) {
    ProductTruncation tr;
    BarnesBetaParams p{{1.0, 2.0}, {0.5, 0.7, 0.3}};
    auto f = barnes_factorization(p, 0.5, tr, FactorizationKind::shintani);
    EXPECT_LE(std::abs(f.log_value - log_eta(p, 0.5)), std::max(f.residual, 1e-12));
    BarnesBetaParams s{{1.0, 1.0}, {0.5, 0.7, 0.3}};
    f = barnes_factorization(s, 0.5, tr, FactorizationKind::special_a1);
    EXPECT_LE(std::abs(f.log_value - log_eta(s, 0.5)), std::max(f.residual, 1e-12));
    EXPECT_DOUBLE_EQ(factorization_multiplicity(3, 2), 4.0);
}

TEST(BarnesBeta, SineRatio) {
    RatioParams r{{{1.0}, {0.25}}, 0.75};
    EXPECT_NEAR(std::exp(log_ratio_mellin(r, 0.25).real()), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(log_ratio_mellin_sine(r, 0.25) - log_ratio_mellin(r, 0.25)), 0.0, 1e-12);
}

TEST(BarnesBetaSampling, ReproducibleAndBounded) {
    auto a = barnes_beta_sample(kB22, 5000, 11, 3, 1);
    auto b = barnes_beta_sample(kB22, 5000, 11, 3, 2);
    EXPECT_EQ(a.values, b.values);
    EXPECT_TRUE(std::all_of(a.values.begin(), a.values.end(), [](double x) { return x > 0.0 && x <= 1.0; }));
    auto c = barnes_beta_sample(kB22, 5000, 12, 3, 1);
    EXPECT_NE(a.values, c.values);
}

TEST(BarnesBetaSampling, MomentsWithinFourSE) {
    auto s = barnes_beta_sample(kB22, 200000, 5, 0, 0);
    for (int k = 1; k <= 2; ++k) {
        auto m = sample_moment(s.values, k);
        EXPECT_LT(std::abs(m.value - std::exp(log_eta(kB22, double(k)))), 4.0 * m.std_error) << "k=" << k;
    }
    BarnesBetaParams g{{1.0, 2.0}, {0.5, 0.4}};
    s = barnes_beta_sample(g, 100000, 5, 1, 0);
    auto m = sample_moment(s.values, 1);
    EXPECT_LT(std::abs(m.value - std::exp(log_eta(g, 1.0))), 4.0 * m.std_error);
}

TEST(BarnesBetaSampling, CsvHeader) {
    auto s = barnes_beta_sample(kB22, 3, 1, 2, 1);
    std::ostringstream os;
    write_csv(s, os);
    EXPECT_NE(os.str().find("# seed=1 stream=2 count=3"), std::string::npos);
}

TEST(BarnesBetaSampling, ScalingInvarianceTwoSampleKS) {
    // beta^k(k a, k b) has the law of beta(a, b); (M, N, k) = (2, 2, 0.5)
    const double k = 0.5;
    const BarnesBetaParams p{{1.0, 0.5}, {1.0, 1.0, 1.0}};
    const BarnesBetaParams pk{{k * 1.0, k * 0.5}, {k, k, k}};
    auto x = barnes_beta_sample(p, 20000, 11, 0, 1).values;
    auto y = barnes_beta_sample(pk, 20000, 11, 1, 1).values;
    for (double& v : y) v = std::pow(v, k);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        double t = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= t) ++i;
        while (j < y.size() && y[j] <= t) ++j;
        d = std::max(d, std::abs(double(i) / x.size() - double(j) / y.size()));
    }
    const double n = double(x.size()), m = double(y.size());
    EXPECT_LT(d, 1.628 * std::sqrt((n + m) / (n * m)));  // 1% level
}
