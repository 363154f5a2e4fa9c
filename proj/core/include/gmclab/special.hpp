#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gmclab {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// log Gamma(z). The branch is the one obtained by continuing the real
/// function through the upper and lower half planes, so the result is
/// continuous away from the negative real axis (same convention as
/// scipy.special.loggamma). Throws DomainError at z = 0, -1, -2, ...
cplx ln_gamma(cplx z);

/// Real log|Gamma(x)|; x must not be a nonpositive integer.
double ln_gamma(double x);

/// Sign of Gamma(x) for real x.
int gamma_sign(double x);

/// lnGamma(x + d) - lnGamma(x); stays accurate when x >> |d|.
double ln_gamma_ratio(double x, double d);
cplx ln_gamma_ratio(cplx x, cplx d);

double digamma(double x);

/// Hurwitz zeta zeta(s, a) for real s >= 1, a > 0. At s = 1 the value
/// -psi(a) is returned; that convention is what the intermittency
/// coefficients need at p = 1.
double hurwitz_zeta(double s, double a);

/// zeta(s) = zeta(s, 1), with zeta(1) = gamma by the convention above.
double riemann_zeta(double s);

/// Bernoulli number B_n with B_1 = -1/2, n <= 64.
double bernoulli_number(int n);

/// Bernoulli polynomial B_n(x), n <= 64.
double bernoulli_poly(int n, double x);
cplx bernoulli_poly(int n, cplx x);

struct BernoulliSpec {
    int M = 0;              // order (number of periods)
    int m = 0;              // derivative order
    std::vector<double> a;  // periods, all > 0
};

/// B_{M,m}(x|a): m-th t-derivative at t = 0 of t^M e^{-xt} / prod(1 - e^{-a_i t}).
/// Public cap m <= 16.
double multiple_bernoulli(const BernoulliSpec& spec, double x);

/// All B_{M,k}(x|a), k = 0..kmax, for internal use (kmax <= 60).
std::vector<cplx> multiple_bernoulli_all(std::span<const double> a, cplx x, int kmax);

/// Taylor coefficients of t^M / prod(1 - e^{-a_i t}) (the f(t) of the
/// multiple gamma integral representation), degree 0..kmax.
std::vector<double> multiple_bernoulli_f_coeffs(std::span<const double> a, int kmax);

/// Log of the Beta function B(x, y), x, y > 0.
double ln_beta(double x, double y);

}  // namespace gmclab
