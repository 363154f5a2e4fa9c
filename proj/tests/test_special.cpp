#include <gtest/gtest.h>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "gmclab/errors.hpp"
#include "gmclab/special.hpp"

using namespace gmclab;

TEST(LnGamma, MatchesStdLgammaOnReals) {
    for (double x : {0.1, 0.7, 1.05, 1.3, 2.1, 3.3, 10.5, 50.0, 170.5}) EXPECT_NEAR(ln_gamma(x), std::lgamma(x), 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
    for (double x : {-0.5, -1.5, -2.7}) EXPECT_NEAR(ln_gamma(x), std::lgamma(x), 1e-12);
}

TEST(LnGamma, ComplexReflection) {
    // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
    for (double y : {0.3, 2.0, 7.5}) {
        double lhs = 2.0 * ln_gamma(cplx(0.5, y)).real();
        EXPECT_NEAR(lhs, std::log(kPi / std::cosh(kPi * y)), 1e-12);
    }
}

TEST(LnGamma, PolesThrow) {
    EXPECT_THROW(ln_gamma(0.0), DomainError);
    EXPECT_THROW(ln_gamma(cplx(-2.0, 0.0)), DomainError);
}

TEST(LnGamma, RatioAgreesWithDifference) {
    EXPECT_NEAR(ln_gamma_ratio(3.7, 0.4), std::lgamma(4.1) - std::lgamma(3.7), 1e-14);
    // large argument: relative accuracy of the small difference
    double x = 1e8, d = 0.25;
    EXPECT_NEAR(ln_gamma_ratio(x, d), d * std::log(x) - d * (1.0 - d) / (2.0 * x), 1e-12);
}

TEST(Zeta, AgainstBoost) {
    for (double s : {2.0, 3.0, 4.5, 10.0}) EXPECT_NEAR(riemann_zeta(s), boost::math::zeta(s), 1e-14);
    EXPECT_NEAR(hurwitz_zeta(2.0, 1.0), kPi * kPi / 6.0, 1e-14);
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    EXPECT_NEAR(hurwitz_zeta(3.0, 0.5), 7.0 * boost::math::zeta(3.0), 1e-13);
}

TEST(Zeta, AtOneIsMinusDigamma) {
    for (double a : {0.3, 1.0, 2.5}) EXPECT_NEAR(hurwitz_zeta(1.0, a), -boost::math::digamma(a), 1e-13);
    EXPECT_NEAR(riemann_zeta(1.0), kEulerGamma, 1e-15);
}

TEST(Bernoulli, Numbers) {
    EXPECT_DOUBLE_EQ(bernoulli_number(1), -0.5);
    for (int n = 1; n <= 20; ++n)
        EXPECT_NEAR(bernoulli_number(2 * n), boost::math::bernoulli_b2n<double>(n),
                    1e-14 * std::abs(boost::math::bernoulli_b2n<double>(n)));
    EXPECT_EQ(bernoulli_number(7), 0.0);
}

TEST(Bernoulli, Polynomials) {
    // B_3(x) = x^3 - 3x^2/2 + x/2
    for (double x : {-0.4, 0.3, 1.7}) EXPECT_NEAR(bernoulli_poly(3, x), x * x * x - 1.5 * x * x + 0.5 * x, 1e-14);
    // B_n(x+1) - B_n(x) = n x^{n-1}
    EXPECT_NEAR(bernoulli_poly(6, 1.3) - bernoulli_poly(6, 0.3), 6.0 * std::pow(0.3, 5), 1e-13);
}

TEST(Bernoulli, MultipleReducesToClassical) {
    // B_{1,n}(x|1) = (-1)^n B_n(x)
    for (int n = 0; n <= 6; ++n)
        EXPECT_NEAR(multiple_bernoulli({1, n, {1.0}}, 0.37), (n % 2 ? -1.0 : 1.0) * bernoulli_poly(n, 0.37), 1e-13);
    // B_{2,2}(x|1,1) = x^2 - 2x + 5/6
    double x = 0.8;
    EXPECT_NEAR(multiple_bernoulli({2, 2, {1.0, 1.0}}, x), x * x - 2 * x + 5.0 / 6.0, 1e-13);
}

TEST(Beta, LogBeta) { EXPECT_NEAR(ln_beta(1.3, 1.7), std::lgamma(1.3) + std::lgamma(1.7) - std::lgamma(3.0), 1e-14); }
