#include <gtest/gtest.h>

#include <cmath>

#include "gmclab/errors.hpp"
#include "gmclab/gmc_laws.hpp"

using namespace gmclab;

namespace {
double lmellin(cplx q, const GMCLawParams& p, Representation r = Representation::double_gamma) {
    return law_mellin(q, p, r).log_value.real();
}
}  // namespace

TEST(GMCLaws, Validation) {
    EXPECT_THROW((GMCLawParams{Geometry::interval, 1.0, 0, 0}.validate()), DomainError);
    EXPECT_THROW((GMCLawParams{Geometry::circle, 2.0, -0.1, 0}.validate()), DomainError);
    GMCLawParams p{Geometry::interval, 2.0, 0, 0};
    EXPECT_THROW(selberg_mellin(2.5, p, Representation::double_gamma), DomainError);
}

TEST(GMCLaws, TrivialPoints) {
    GMCLawParams p{Geometry::interval, 3.0, 0.2, 0.5};
    EXPECT_NEAR(lmellin(0.0, p), 0.0, 1e-15);
    GMCLawParams c{Geometry::circle, 2.0, 0.0, 0.0};
    EXPECT_NEAR(std::exp(lmellin(-1.0, c)), kPi / 2.0, 1e-13);
}

TEST(GMCLaws, DysonClosedForm) {
    for (double tau : {1.5, 3.0})
        for (double q : {-2.0, 0.5, 1.2}) {
            if (q >= tau) continue;
            GMCLawParams p{Geometry::circle, tau, 0, 0};
            EXPECT_NEAR(lmellin(q, p), std::lgamma(1.0 - q / tau) - q * std::lgamma(1.0 - 1.0 / tau), 1e-12);
        }
}

TEST(GMCLaws, FirstMomentIsMeanPotential) {
    // E[M] = int_0^1 x^l1 (1-x)^l2 dx = B(1 + l1, 1 + l2)
    GMCLawParams p{Geometry::interval, 4.0, 0.3, 0.7};
    EXPECT_NEAR(std::exp(lmellin(1.0, p)), std::beta(1.3, 1.7), 1e-13);
    EXPECT_NEAR(selberg_moment_product(1, p), std::beta(1.3, 1.7), 1e-14);
    // circle: Gamma(1 + 2l) / Gamma(1 + l)^2
    GMCLawParams c{Geometry::circle, 4.0, 0.4, 0.4};
    EXPECT_NEAR(morris_moment_product(1, c), std::tgamma(1.8) / std::pow(std::tgamma(1.4), 2), 1e-13);
}

TEST(GMCLaws, SecondSelbergMomentAtTauFive) {
    // int int |x - y|^{-2/5} dx dy = 1 / ((1 - 1/5)(1 - 2/5)) = 25/12
    GMCLawParams p{Geometry::interval, 5.0, 0, 0};
    EXPECT_NEAR(selberg_moment_product(2, p), 25.0 / 12.0, 1e-14);
    EXPECT_NEAR(std::exp(lmellin(2.0, p)), 25.0 / 12.0, 1e-12);
}

TEST(GMCLaws, RepresentationsAgree) {
    for (auto g : {Geometry::interval, Geometry::circle}) {
        GMCLawParams p{g, 3.5, 0.2, 0.2};
        for (cplx q : {cplx(0.7), cplx(-1.4), cplx(1.1, 0.6)}) {
            auto dg = law_mellin(q, p, Representation::double_gamma);
            auto ip = law_mellin(q, p, Representation::infinite_product);
            auto lk = law_mellin(q, p, Representation::levy_khinchine);
            auto dc = law_mellin(q, p, Representation::decomposition);
            EXPECT_LE(std::abs(ip.log_value - dg.log_value), std::max(ip.error_estimate, 1e-13));
            EXPECT_LT(std::abs(lk.log_value - dg.log_value), 1e-8);
            EXPECT_LT(std::abs(dc.log_value - dg.log_value), 1e-10);
        }
    }
}

TEST(GMCLaws, IntermittencyFirstCoefficientVanishesAtOne) {
    auto c = intermittency_coefficients(Geometry::interval, 1.0, 0, 0, 6);
    for (const auto& x : c) EXPECT_NEAR(std::abs(x), 0.0, 1e-12);
}

TEST(GMCLaws, Involution) {
    EXPECT_LT(involution_residual(Geometry::interval, 0.4, 2.5, 0.1, 0.3), 1e-10);
    EXPECT_LT(involution_residual(Geometry::circle, cplx(-0.5, 0.4), 0.6, 0.2, 0.2), 1e-10);
    EXPECT_THROW(involution_residual(Geometry::interval, 1.5, 2.0, 0, 0), DomainError);
}

TEST(GMCLaws, CriticalValues) {
    EXPECT_NEAR(std::exp(log_critical_mellin(-1.0, Geometry::interval, 0, 0).real()), 24.0, 1e-10);
    EXPECT_NEAR(std::exp(log_critical_mellin(-1.0, Geometry::circle, 0, 0).real()), 1.0, 1e-12);
    // l = 2: 5! / (1!^2 0!) * 6! / (2!^2 1!) = 21600
    EXPECT_NEAR(critical_negative_moment(2), 21600.0, 1e-8);
    EXPECT_NEAR(std::exp(log_critical_mellin(-2.0, Geometry::interval, 0, 0).real()), 21600.0, 1e-6);
}

TEST(GMCLaws, ComplexSelbergRoutes) {
    ComplexSelbergParams p{2.0, -0.8, -0.8};
    double d = complex_selberg_integral(1, p);
    EXPECT_NEAR(std::exp(log_complex_selberg(1.0, p, ComplexSelbergForm::sine).real()) / d, 1.0, 1e-10);
    EXPECT_NEAR(std::exp(log_complex_selberg(1.0, p, ComplexSelbergForm::gamma2).real()) / d, 1.0, 1e-10);
    EXPECT_THROW(log_complex_selberg(5.0, p, ComplexSelbergForm::sine), DomainError);
}

TEST(GMCLaws, IPRScaling) {
    const double b = std::sqrt(0.1);
    EXPECT_NEAR(ipr_exponent(2, b), -0.8, 1e-15);
    EXPECT_NEAR(ipr_exponent(3, 0.0), -2.0, 1e-15);
    for (double N : {256.0, 1024.0})
        EXPECT_NEAR(log_ipr_ratio(2, b, 2 * N) - log_ipr_ratio(2, b, N), -0.8 * std::log(2.0), 1e-12);
}
