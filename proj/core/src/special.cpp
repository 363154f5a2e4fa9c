#include "gmclab/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gmclab/errors.hpp"

namespace gmclab {

namespace {

using boost::multiprecision::cpp_rational;

constexpr int kMaxBernoulli = 64;
constexpr int kMaxInternal = 64;

struct BernoulliTables {
    std::array<double, kMaxBernoulli + 1> bn{};
    // (-1)^n B_n / n!, i.e. Taylor coefficients of u/(1-e^{-u}).
    std::array<double, kMaxInternal + 1> plus_over_fact{};
    // poly[n][k] = C(n,k) B_{n-k}, coefficient of x^k in B_n(x).
    std::array<std::array<double, kMaxBernoulli + 1>, kMaxBernoulli + 1> poly{};
};

const BernoulliTables& tables() {
    static const BernoulliTables t = [] {
        BernoulliTables out;
        // Akiyama-Tanigawa gives B_n with B_1 = +1/2; flip it afterwards.
        std::vector<cpp_rational> b(kMaxBernoulli + 1);
        std::vector<cpp_rational> w(kMaxBernoulli + 1);
        for (int m = 0; m <= kMaxBernoulli; ++m) {
            w[m] = cpp_rational(1, m + 1);
            for (int j = m; j >= 1; --j) w[j - 1] = j * (w[j - 1] - w[j]);
            b[m] = w[0];
        }
        b[1] = cpp_rational(-1, 2);
        cpp_rational fact = 1;
        for (int n = 0; n <= kMaxBernoulli; ++n) {
            if (n > 0) fact *= n;
            out.bn[n] = static_cast<double>(b[n]);
            cpp_rational c = b[n] / fact;
            if (n % 2 == 1) c = -c;
            out.plus_over_fact[n] = static_cast<double>(c);
        }
        for (int n = 0; n <= kMaxBernoulli; ++n) {
            cpp_rational binom = 1;
            for (int k = 0; k <= n; ++k) {
                out.poly[n][k] = static_cast<double>(binom * b[n - k]);
                binom = binom * (n - k) / (k + 1);
            }
        }
        return out;
    }();
    return t;
}

// zeta(k) for k = 2..40, used by the Taylor series of lnGamma near 1.
const std::array<double, 41>& zeta_table() {
    static const std::array<double, 41> z = [] {
        std::array<double, 41> out{};
        for (int k = 2; k <= 40; ++k) out[k] = hurwitz_zeta(k, 1.0);
        return out;
    }();
    return z;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// lnGamma(1 + e) for |e| <= 0.2.
double ln_gamma_near_one(double e) {
    const auto& z = zeta_table();
    double sum = 0.0;
    double p = -e;
    for (int k = 2; k <= 40; ++k) {
        p *= -e;
        sum += z[k] * p / k;
        if (std::abs(p) < 1e-20) break;
    }
    return -kEulerGamma * e + sum;
}

template <class T>
T stirling_tail(T z) {
    // Sum_{k=1}^{10} B_{2k} / (2k(2k-1) z^{2k-1})
    const auto& t = tables();
    T inv = T(1.0) / z;
    T inv2 = inv * inv;
    T sum = 0.0;
    T p = inv;
    for (int k = 1; k <= 10; ++k) {
        sum += t.bn[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return sum;
}

}  // namespace

double ln_gamma(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x))
        throw DomainError("ln_gamma: pole at nonpositive integer " + std::to_string(x));
    if (x < 0.5) {
        // reflection: |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
        double s = std::abs(std::sin(kPi * (x - std::floor(x))));
        return std::log(kPi / s) - ln_gamma(1.0 - x);
    }
    if (std::abs(x - 1.0) <= 0.2) return ln_gamma_near_one(x - 1.0);
    if (std::abs(x - 2.0) <= 0.2) return ln_gamma_near_one(x - 2.0) + std::log1p(x - 2.0);
    double shift = 0.0;
    double prod = 1.0;
    while (x < 15.0) {
        prod *= x;
        x += 1.0;
        if (prod > 1e250) {
            shift += std::log(prod);
            prod = 1.0;
        }
    }
    shift += std::log(prod);
    return (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi + stirling_tail(x) - shift;
}

int gamma_sign(double x) {
    if (x > 0.0) return 1;
    if (is_nonpositive_integer(x)) throw DomainError("gamma_sign: pole");
    // Gamma alternates sign on each unit interval left of zero.
    long k = static_cast<long>(std::floor(x));
    return (k % 2 == 0) ? 1 : -1;
}

cplx ln_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() > 0.0) return {ln_gamma(z.real()), 0.0};
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw DomainError("ln_gamma: pole at nonpositive integer " + std::to_string(z.real()));
    // Sum of principal logs over the shifts keeps the branch continuous
    // off the negative real axis.
    cplx shift = 0.0;
    while (std::abs(z) < 15.0 || z.real() < 0.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + stirling_tail(z) - shift;
}

double ln_gamma_ratio(double x, double d) {
    if (x < 30.0 || x + d < 30.0) return ln_gamma(x + d) - ln_gamma(x);
    // Stirling on both sides, differenced term by term
    double y = x + d;
    double r = (y - 0.5) * std::log1p(d / x) + d * std::log(x) - d;
    const auto& t = tables();
    for (int k = 1; k <= 10; ++k) {
        double e = 1.0 - 2.0 * k;
        r += t.bn[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * (std::pow(y, e) - std::pow(x, e));
    }
    return r;
}

cplx ln_gamma_ratio(cplx x, cplx d) {
    if (std::abs(x) < 30.0 || std::abs(x + d) < 30.0 || x.real() < 0.0 || (x + d).real() < 0.0)
        return ln_gamma(x + d) - ln_gamma(x);
    cplx y = x + d;
    cplx w = d / x, u = 1.0 + w;
    cplx l1p = (u == 1.0) ? w : std::log(u) * w / (u - 1.0);
    cplx r = (y - 0.5) * l1p + d * std::log(x) - d;
    const auto& t = tables();
    for (int k = 1; k <= 10; ++k) {
        double e = 1.0 - 2.0 * k;
        r += t.bn[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * (std::pow(y, e) - std::pow(x, e));
    }
    return r;
}

double digamma(double x) {
    if (is_nonpositive_integer(x)) throw DomainError("digamma: pole");
    if (x < 0.0) return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const auto& t = tables();
    double inv2 = 1.0 / (x * x);
    double p = inv2;
    double s = 0.0;
    for (int k = 1; k <= 10; ++k) {
        s += t.bn[2 * k] / (2.0 * k) * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - s;
}

double hurwitz_zeta(double s, double a) {
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
    if (!(s >= 1.0)) throw DomainError("hurwitz_zeta: s must be >= 1");
    if (s == 1.0) return -digamma(a);
    const auto& t = tables();
    double sum = 0.0;
    double target = 15.0 + s;
    while (a < target) {
        sum += std::pow(a, -s);
        a += 1.0;
    }
    sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    // Euler-Maclaurin: B_{2j}/(2j)! * s(s+1)...(s+2j-2) a^{-s-2j+1}
    double rising = s;
    double fact = 2.0;
    double p = std::pow(a, -s - 1.0);
    double inv2 = 1.0 / (a * a);
    for (int j = 1; j <= 12; ++j) {
        double term = t.bn[2 * j] / fact * rising * p;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        p *= inv2;
    }
    return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

double bernoulli_number(int n) {
    if (n < 0 || n > kMaxBernoulli) throw DomainError("bernoulli_number: order out of range [0, 64]");
    return tables().bn[n];
}

template <class T>
static T bernoulli_poly_impl(int n, T x) {
    if (n < 0 || n > kMaxBernoulli) throw DomainError("bernoulli_poly: order out of range [0, 64]");
    const auto& c = tables().poly[n];
    T r = 0.0;
    for (int k = n; k >= 0; --k) r = r * x + c[k];
    return r;
}

double bernoulli_poly(int n, double x) { return bernoulli_poly_impl(n, x); }
cplx bernoulli_poly(int n, cplx x) { return bernoulli_poly_impl(n, x); }

std::vector<double> multiple_bernoulli_f_coeffs(std::span<const double> a, int kmax) {
    if (kmax > kMaxInternal) throw DomainError("multiple_bernoulli: degree too large");
    const auto& t = tables();
    std::vector<double> f(kmax + 1, 0.0);
    f[0] = 1.0;
    std::vector<double> g(kmax + 1);
    for (double ai : a) {
        if (!(ai > 0.0)) throw DomainError("multiple_bernoulli: periods must be positive");
        // t/(1 - e^{-a t}) = sum_n a^{n-1} (-1)^n B_n / n! t^n
        double pw = 1.0 / ai;
        for (int n = 0; n <= kmax; ++n) {
            g[n] = pw * t.plus_over_fact[n];
            pw *= ai;
        }
        for (int n = kmax; n >= 0; --n) {
            double acc = 0.0;
            for (int k = 0; k <= n; ++k) acc += f[k] * g[n - k];
            f[n] = acc;
        }
    }
    return f;
}

std::vector<cplx> multiple_bernoulli_all(std::span<const double> a, cplx x, int kmax) {
    auto f = multiple_bernoulli_f_coeffs(a, kmax);
    // multiply by e^{-x t} and rescale by k!
    std::vector<cplx> out(kmax + 1);
    std::vector<cplx> e(kmax + 1);
    e[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) e[k] = e[k - 1] * (-x) / double(k);
    double fact = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) fact *= k;
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += f[j] * e[k - j];
        out[k] = acc * fact;
    }
    return out;
}

double multiple_bernoulli(const BernoulliSpec& spec, double x) {
    if (spec.M < 0 || spec.m < 0) throw DomainError("multiple_bernoulli: negative order");
    if (static_cast<int>(spec.a.size()) != spec.M)
        throw DomainError("multiple_bernoulli: period vector must have M entries");
    if (spec.m > 16) throw DomainError("multiple_bernoulli: degree m > 16 not supported");
    return multiple_bernoulli_all(spec.a, cplx(x, 0.0), spec.m)[spec.m].real();
}

double ln_beta(double x, double y) { return ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y); }

}  // namespace gmclab
