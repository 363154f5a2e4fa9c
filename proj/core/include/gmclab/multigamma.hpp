#pragma once

#include <span>
#include <string>
#include <vector>

#include "gmclab/special.hpp"

namespace gmclab {

struct MultiGammaParams {
    std::vector<double> a;  // periods, all > 0, at most 4 of them
    int M() const { return static_cast<int>(a.size()); }
};

enum class GammaMethod { closed_form, quadrature, asymptotic, shintani_product, functional_shift };

const char* to_string(GammaMethod m);

struct GammaEvaluation {
    cplx value;  // log Gamma_M(w|a), modern normalization
    GammaMethod method = GammaMethod::closed_form;
    double error_estimate = 0.0;
    int shifts = 0;
    std::string warning;  // set when more than 200 shifts were needed
};

/// log Gamma_M(w|a) in the modern normalization. Off the positive half
/// plane the functional equation is used to shift w upward; the value is
/// the continuation along those shifts (principal logs for M <= 1).
GammaEvaluation log_multiple_gamma(const MultiGammaParams& p, cplx w);
cplx log_multiple_gamma(std::span<const double> a, cplx w);
double log_multiple_gamma(std::span<const double> a, double w);

/// log Gamma_M(w+q|a) - log Gamma_M(w|a), computed without forming the
/// two large logs separately. This is what every Mellin transform uses.
cplx log_multiple_gamma_ratio(std::span<const double> a, cplx w, cplx q);
double log_multiple_gamma_ratio(std::span<const double> a, double w, double q);

/// log S_M(w|a) = (-1)^M log Gamma_M(|a|-w) - log Gamma_M(w).
cplx log_multiple_sine(std::span<const double> a, cplx w);

/// log G(z|tau), normalized by G(1|tau) = 1. Real tau > 0 only.
cplx log_barnes_G(cplx z, double tau);
double log_barnes_G(double z, double tau);

/// log of the double gamma function in the classical normalization
/// (z Gamma_2(z) -> 1 as z -> 0).
cplx log_gamma2_classical(cplx z, double a1, double a2);

/// Lawrie-King integral for log G(z|tau), Re z > 0.
double log_barnes_G_integral(double z, double tau);

/// Shintani product for the classical Gamma_2(z|1,tau); real z > 0.
struct ProductEvaluation {
    double value = 0.0;
    double residual = 0.0;
    int terms = 0;
};
ProductEvaluation log_gamma2_shintani(double z, double tau, int terms = 10000);

/// Third difference (step h) in w of log Gamma_2(w|a,a2) - log Gamma_1(w|a),
/// once directly and once from the general Shintani product. The
/// polynomial regularizers of the product have degree 2 in w and drop out.
struct ShintaniCheck {
    double direct = 0.0;
    double product = 0.0;
    double residual_bound = 0.0;
};
ShintaniCheck general_shintani_check(double w, double a, double a2, double h = 0.25,
                                     int terms = 10000);

struct IntegralCheck {
    double integral = 0.0;  // quadrature side
    double closed = 0.0;    // G-function side
    double residual = 0.0;
};

/// I(q|a,tau) by quadrature, and the residual of its G-ratio closed form.
IntegralCheck ratio_G_integral(double q, double a, double tau);

/// Asymptotic series for I(q|a tau, tau) truncated at r = rmax.
double ratio_G_integral_asymptotic(double q, double a, double tau, int rmax);

/// Both sides (log scale) of the four-G ratio identity.
IntegralCheck g_ratio_identity_check(double q, double b, double c, double d, double tau);

/// Residual of Barnes multiplication for M = 2 on the log scale.
double barnes_multiplication_check(double w, double a1, double a2, int k);

}  // namespace gmclab
