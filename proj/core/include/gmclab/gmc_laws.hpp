#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gmclab/barnes_beta.hpp"
#include "gmclab/quadrature.hpp"
#include "gmclab/special.hpp"

namespace gmclab {

enum class Geometry { interval, circle };
std::string to_string(Geometry g);

/// Selberg (interval) or Morris (circle) law with tau = 1/beta^2.
struct GMCLawParams {
    Geometry geometry = Geometry::interval;
    double tau = 2.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;

    /// tau > 1 and lambda_i >= 0.
    void validate() const;
};

/// Parameters of the continued complex Selberg integral.
struct ComplexSelbergParams {
    double tau = 2.0;
    double lambda1 = -0.5;
    double lambda2 = -0.5;

    void validate() const;
    /// Open interval of admissible Re(q).
    std::pair<double, double> strip() const;
};

enum class Representation { double_gamma, infinite_product, levy_khinchine, asymptotic_series, decomposition };
std::string to_string(Representation r);

struct MellinRepresentation {
    Representation kind = Representation::double_gamma;
    cplx log_value = 0.0;
    cplx value = 1.0;
    double error_estimate = 0.0;
    long terms = 0;
};

struct MellinOptions {
    ProductTruncation product{};
    int asymptotic_order = 6;
};

// -- integer moments -------------------------------------------------------

/// Selberg integral: E[M^n] on the interval, n < tau.
double selberg_moment_product(int n, const GMCLawParams& p);
/// Morris integral: E[M^n] on the circle, n < tau.
double morris_moment_product(int n, const GMCLawParams& p);
/// Closed-form E[M^{-n}] for either geometry.
double negative_moment_product(int n, const GMCLawParams& p);

// -- Mellin transforms -----------------------------------------------------

/// log E[M^q] through double gamma ratios. These are the analytic
/// continuations: any tau > 0 and lambda, no admissibility checks beyond
/// poles of the gamma factors.
cplx log_selberg_gamma2(cplx q, double tau, double lambda1, double lambda2);
cplx log_morris_gamma2(cplx q, double tau, double lambda1, double lambda2);

/// E[M^q] of the law in the requested representation. Needs Re q < tau.
MellinRepresentation selberg_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                    const MellinOptions& opt = {});
MellinRepresentation morris_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                   const MellinOptions& opt = {});
/// Dispatches on p.geometry.
MellinRepresentation law_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                const MellinOptions& opt = {});

/// c_1..c_pmax of log E[M^q] = q log(phibar) + sum_p c_p(q) mu^p, mu = 2/tau.
std::vector<cplx> intermittency_coefficients(Geometry g, cplx q, double lambda1, double lambda2,
                                             int pmax);
/// log of the mean of the potential, phibar.
double log_phibar(Geometry g, double lambda1, double lambda2);

// -- involution ------------------------------------------------------------

/// |log LHS - log RHS| (imaginary part taken modulo 2 pi) of the
/// tau -> 1/tau, q -> q/tau, lambda -> tau lambda invariance.
double involution_residual(Geometry g, cplx q, double tau, double lambda1, double lambda2);
double complex_involution_residual(cplx q, const ComplexSelbergParams& p);

// -- decomposition and sampling --------------------------------------------

/// log of E[product of the independent factors ^ q], factor by factor.
cplx decomposition_log_mellin(cplx q, const GMCLawParams& p);
/// Variance of log L, the Gaussian factor of the interval decomposition.
double lognormal_variance(double tau);

/// i.i.d. samples of the law as the explicit product of Barnes beta,
/// Frechet and lognormal factors. The circle needs lambda1 = lambda2.
SampleBatch law_sample(const GMCLawParams& p, std::size_t n, std::uint64_t seed,
                       std::uint64_t stream, int threads = 0);

// -- critical limit ---------------------------------------------------------

/// log lim_{tau -> 1} Gamma(1 - 1/tau)^q E[M^q], Re q < 1.
cplx log_critical_mellin(cplx q, Geometry g, double lambda1, double lambda2);
/// prod_{k<l} (3+l+k)! / ((k+1)!^2 k!): negative moments of the critical
/// interval law at lambda = 0.
double critical_negative_moment(int l);

// -- complex Selberg ---------------------------------------------------------

enum class ComplexSelbergForm { sine, gamma2 };
/// log of the continued complex Selberg integral; q must lie in the strip.
cplx log_complex_selberg(cplx q, const ComplexSelbergParams& p, ComplexSelbergForm form);
/// The integral itself at a positive integer n in the strip.
double complex_selberg_integral(int n, const ComplexSelbergParams& p);

// -- inverse participation ratios ---------------------------------------------

/// log of N^{1+q^2 b^2 + (1+b^2)s} E[M^s | tau = 1/b^2, lambda = -q b^2].
cplx log_ipr_prediction(double q, cplx s, double beta, double N);
/// Closed form at s = -n (general q).
double log_ipr_negative(double q, int n, double beta, double N);
/// E[Z(n beta) / Z(beta)^n], the q = n case.
double log_ipr_ratio(int n, double beta, double N);
/// Predicted N exponent of the IPR.
double ipr_exponent(int n, double beta);

// -- mod-Gaussian limit functions ---------------------------------------------

enum class ModGaussianVariant { interval, circle, max_interval, max_circle };
std::string to_string(ModGaussianVariant v);
/// Pure evaluation of the displayed limit functions; tau is ignored for
/// the two max variants (critical), whose undetermined constant is set to 0.
cplx log_mod_gaussian_limit(cplx q, double tau, ModGaussianVariant v);

}  // namespace gmclab
