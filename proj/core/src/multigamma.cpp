#include "gmclab/multigamma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gmclab/errors.hpp"
#include "gmclab/quadrature.hpp"

namespace gmclab {

namespace {

constexpr int kSeriesTerms = 40;
constexpr double kPoleTol = 1e-8;
constexpr int kMaxOrder = 4;

struct Periods {
    std::vector<double> a;
    double sum = 0.0;
    double amax = 0.0;
    std::size_t imax = 0;
};

Periods make_periods(std::span<const double> a) {
    if (a.size() > kMaxOrder) throw DomainError("multiple gamma: order M > 4 is not supported");
    Periods p;
    p.a.assign(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] > 0.0)) throw DomainError("multiple gamma: periods must be positive");
        p.sum += a[i];
        if (a[i] > p.amax) {
            p.amax = a[i];
            p.imax = i;
        }
    }
    return p;
}

std::vector<double> without(const std::vector<double>& a, std::size_t i) {
    std::vector<double> r;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (k != i) r.push_back(a[k]);
    return r;
}

cplx clog1p(cplx z) {
    if (std::abs(z) < 0.5) return 2.0 * std::atanh(z / (2.0 + z));
    return std::log(1.0 + z);
}

cplx log_gamma1(double a, cplx w) {
    cplx x = w / a;
    if (x.imag() == 0.0 && x.real() <= 0.0 && std::abs(x.real() - std::round(x.real())) < kPoleTol / a)
        throw DomainError("log multiple gamma: w is on the pole lattice");
    return (x - 0.5) * std::log(a) - 0.5 * kLog2Pi + ln_gamma(x);
}

// Taylor coefficients h_k, k = 0..K, of f(t) e^{-wt} (e^{-qt} - 1 if ratio).
std::vector<cplx> taylor(const std::vector<double>& a, cplx w, const cplx* q, int K) {
    auto f = multiple_bernoulli_f_coeffs(a, K);
    std::vector<cplx> e(K + 1);
    e[0] = 1.0;
    for (int k = 1; k <= K; ++k) e[k] = e[k - 1] * (-w) / double(k);
    if (q) {
        std::vector<cplx> d(K + 1);
        d[0] = 0.0;
        cplx p = 1.0;
        for (int k = 1; k <= K; ++k) {
            p *= -(*q) / double(k);
            d[k] = p;
        }
        std::vector<cplx> ed(K + 1, 0.0);
        for (int n = 0; n <= K; ++n)
            for (int k = 0; k <= n; ++k) ed[n] += e[k] * d[n - k];
        e.swap(ed);
    }
    std::vector<cplx> h(K + 1, 0.0);
    for (int n = 0; n <= K; ++n)
        for (int k = 0; k <= n; ++k) h[n] += f[k] * e[n - k];
    return h;
}

struct Direct {
    cplx value;
    double error;
};

// Quadrature form on Re w >= max(1, |Im w|). The integral is split at t0:
// on (0, t0] the subtracted Taylor terms are integrated in closed form.
Direct direct(const std::vector<double>& a, double asum, cplx w, const cplx* q) {
    const int M = static_cast<int>(a.size());
    double wmag = std::abs(w);
    double rate = w.real();
    if (q) {
        wmag = std::max(wmag, std::abs(w + *q));
        rate = std::min(rate, (w + *q).real());
    }
    const double t0 = std::min(1.0, 2.0 / (wmag + asum));
    const int K = M + kSeriesTerms;
    auto h = taylor(a, w, q, K);
    cplx series = 0.0;
    for (int k = 0; k <= K; ++k) {
        double c;
        if (k < M)
            c = -std::pow(t0, k - M) / double(M - k);
        else if (k == M)
            c = kEulerGamma + std::log(t0);
        else
            c = std::pow(t0, k - M) / double(k - M);
        series += h[k] * c;
    }
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-15;
    cfg.rel_tol = 1e-14;
    cfg.decay_rate = rate;
    auto integrand = [&](double t) -> cplx {
        double den = t;
        for (double ai : a) den *= -std::expm1(-ai * t);
        cplx num = std::exp(-w * t);
        if (q) num *= em1(-(*q) * t);
        return num / den;
    };
    auto tail = integrate_tail<cplx>(integrand, t0, std::max(t0, 1.0 / rate), cfg);
    return {tail.value + series, tail.error};
}

cplx asymptotic(const std::vector<double>& a, cplx w) {
    const int M = static_cast<int>(a.size());
    const int K = 60;
    auto f = multiple_bernoulli_f_coeffs(a, K);
    // coefficient of t^M in f(t) e^{-wt}
    cplx hM = 0.0;
    cplx e = 1.0;
    for (int k = 0; k <= M; ++k) {
        hM += f[M - k] * e;
        e *= -w / double(k + 1);
    }
    cplx r = -hM * std::log(w);
    for (int k = 0; k <= M; ++k) {
        double harm = 0.0;
        for (int l = 1; l <= M - k; ++l) harm += 1.0 / l;
        double fact = std::tgamma(M - k + 1.0);
        r += f[k] * std::pow(-w, M - k) / fact * harm;
    }
    double prev = INFINITY;
    for (int k = M + 1; k <= K; ++k) {
        cplx term = f[k] * std::tgamma(double(k - M)) * std::pow(w, M - k);
        double m = std::abs(term);
        if (m > prev) break;
        r += term;
        prev = m;
        if (m < 1e-17 * std::abs(r)) break;
    }
    return r;
}

bool quadrature_ok(cplx w) { return w.real() >= std::max(1.0, std::abs(w.imag())); }

GammaEvaluation log_mg(const std::vector<double>& a, cplx w, int depth);

GammaEvaluation log_mg(const std::vector<double>& a, cplx w, int depth) {
    const int M = static_cast<int>(a.size());
    GammaEvaluation out;
    if (M == 0) {
        if (std::abs(w) < kPoleTol) throw DomainError("log multiple gamma: w is on the pole lattice");
        out.value = -std::log(w);
        return out;
    }
    if (M == 1) {
        out.value = log_gamma1(a[0], w);
        return out;
    }
    Periods p = make_periods(a);
    if (std::abs(w) >= 25.0 * p.amax && w.real() > 0.0) {
        out.value = asymptotic(a, w);
        out.method = GammaMethod::asymptotic;
        out.error_estimate = 1e-15 * std::abs(out.value);
        return out;
    }
    if (quadrature_ok(w)) {
        auto d = direct(a, p.sum, w, nullptr);
        out.value = d.value;
        out.error_estimate = d.error;
        out.method = GammaMethod::quadrature;
        return out;
    }
    // Gamma_M(w) = Gamma_{M-1}(w | a without a_i) Gamma_M(w + a_i)
    double target = std::max(1.0, std::abs(w.imag()));
    int n = static_cast<int>(std::ceil((target - w.real()) / p.amax));
    auto rest = without(a, p.imax);
    cplx acc = 0.0;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
        auto g = log_mg(rest, w + double(j) * p.amax, depth + 1);
        acc += g.value;
        err += g.error_estimate;
    }
    auto top = log_mg(a, w + double(n) * p.amax, depth + 1);
    out.value = acc + top.value;
    out.error_estimate = err + top.error_estimate;
    out.method = GammaMethod::functional_shift;
    out.shifts = n + top.shifts;
    if (out.shifts > 200) out.warning = "more than 200 functional-equation shifts; precision may be reduced";
    return out;
}

cplx ratio_impl(const std::vector<double>& a, cplx w, cplx q) {
    const int M = static_cast<int>(a.size());
    if (q == 0.0) return 0.0;
    if (M == 0) {
        if (std::abs(w) < kPoleTol || std::abs(w + q) < kPoleTol)
            throw DomainError("log multiple gamma: w is on the pole lattice");
        return -clog1p(q / w);
    }
    if (M == 1) {
        double s = a[0];
        if (w.imag() == 0.0 && q.imag() == 0.0 && w.real() > 0.0 && (w + q).real() > 0.0)
            return q.real() / s * std::log(s) + ln_gamma_ratio(w.real() / s, q.real() / s);
        return log_gamma1(s, w + q) - log_gamma1(s, w);
    }
    Periods p = make_periods(a);
    cplx v = w + q;
    if (quadrature_ok(w) && quadrature_ok(v)) return direct(a, p.sum, w, &q).value;
    if (std::min(std::abs(w), std::abs(v)) >= 25.0 * p.amax && w.real() > 0.0 && v.real() > 0.0)
        return asymptotic(a, v) - asymptotic(a, w);
    double target = std::max({1.0, std::abs(w.imag()), std::abs(v.imag())});
    double lo = std::min(w.real(), v.real());
    int n = std::max(1, static_cast<int>(std::ceil((target - lo) / p.amax)));
    auto rest = without(a, p.imax);
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) acc += ratio_impl(rest, w + double(j) * p.amax, q);
    return acc + ratio_impl(a, w + double(n) * p.amax, q);
}


cplx s0c(cplx z, double a1, double a2) { return (z * z - z * (a1 + a2)) / (2.0 * a1 * a2); }

// log G(A|tau) - log G(B|tau)
cplx log_G_ratio(cplx A, cplx B, double tau) {
    const double a[2] = {1.0, tau};
    return 0.5 * (A - B) * kLog2Pi - (s0c(A, 1.0, tau) - s0c(B, 1.0, tau)) * std::log(tau) -
           ratio_impl(std::vector<double>(a, a + 2), B, A - B);
}

}  // namespace

const char* to_string(GammaMethod m) {
    switch (m) {
        case GammaMethod::closed_form: return "closed_form";
        case GammaMethod::quadrature: return "quadrature";
        case GammaMethod::asymptotic: return "asymptotic";
        case GammaMethod::shintani_product: return "shintani_product";
        case GammaMethod::functional_shift: return "functional_shift";
    }
    return "unknown";
}

GammaEvaluation log_multiple_gamma(const MultiGammaParams& p, cplx w) {
    make_periods(p.a);
    return log_mg(p.a, w, 0);
}

cplx log_multiple_gamma(std::span<const double> a, cplx w) {
    make_periods(a);
    return log_mg(std::vector<double>(a.begin(), a.end()), w, 0).value;
}

double log_multiple_gamma(std::span<const double> a, double w) {
    return log_multiple_gamma(a, cplx(w, 0.0)).real();
}

cplx log_multiple_gamma_ratio(std::span<const double> a, cplx w, cplx q) {
    make_periods(a);
    return ratio_impl(std::vector<double>(a.begin(), a.end()), w, q);
}

double log_multiple_gamma_ratio(std::span<const double> a, double w, double q) {
    return log_multiple_gamma_ratio(a, cplx(w, 0.0), cplx(q, 0.0)).real();
}

cplx log_multiple_sine(std::span<const double> a, cplx w) {
    auto p = make_periods(a);
    std::vector<double> av(a.begin(), a.end());
    double sign = (av.size() % 2 == 0) ? 1.0 : -1.0;
    // (-1)^M L(|a| - w) - L(w); for M even this is one ratio
    if (sign > 0) return ratio_impl(av, w, p.sum - 2.0 * w);
    return -log_mg(av, p.sum - w, 0).value - log_mg(av, w, 0).value;
}

cplx log_barnes_G(cplx z, double tau) {
    if (!(tau > 0.0)) throw DomainError("barnes_G: tau must be real and positive");
    return log_G_ratio(z, 1.0, tau);
}

double log_barnes_G(double z, double tau) { return log_barnes_G(cplx(z, 0.0), tau).real(); }

cplx log_gamma2_classical(cplx z, double a1, double a2) {
    if (!(a1 > 0.0) || !(a2 > 0.0)) throw DomainError("gamma2_classical: periods must be positive");
    return z / (2.0 * a1) * kLog2Pi - (1.0 + s0c(z, a1, a2)) * std::log(a2) -
           log_barnes_G(z / a1, a2 / a1);
}

double log_barnes_G_integral(double z, double tau) {
    if (!(z > 0.0) || !(tau > 0.0)) throw DomainError("Lawrie-King integral needs z, tau > 0");
    auto g = [&](auto t) {
        return ((1.0 - z) / em1(tau * t) + (1.0 - z) * ex(-tau * t) +
                (z * z - z) * ex(-tau * t) / (2.0 * tau) +
                (-em1(-(z - 1.0) * t)) / (em1(t) * (-em1(-tau * t)))) /
               t;
    };
    QuadratureConfig cfg;
    cfg.decay_rate = std::min({1.0, tau, z});
    double t0 = std::min(0.5, 1.0 / (1.0 + tau + std::abs(z)));
    return integrate_with_series<double>(g, t0, cfg).value;
}

ProductEvaluation log_gamma2_shintani(double z, double tau, int terms) {
    if (!(z > 0.0) || !(tau > 0.0)) throw DomainError("Shintani product needs z, tau > 0");
    auto log_term = [&](long m) {
        double x = m * tau;
        return (1.0 - z) * std::log(x) + (z - z * z) / (2.0 * x) + ln_gamma_ratio(x + 1.0, z - 1.0);
    };
    const int order = 8;
    auto cz = ln_gamma_tail_coeffs(tau, z, order);
    auto c1 = ln_gamma_tail_coeffs(tau, 1.0, order);
    std::vector<double> model(order);
    for (int j = 0; j < order; ++j) model[j] = cz[j] - c1[j];
    model[0] += (z - z * z) / (2.0 * tau);
    if (std::abs(model[0]) < 1e-13) model[0] = 0.0;
    ProductTruncation trunc;
    trunc.max_terms = terms;
    trunc.tail_order = order - 1;
    trunc.target_rel_error = 1e-4;
    auto prod = truncated_product(log_term, trunc, model);
    ProductEvaluation out;
    out.value = 0.5 * z * kLog2Pi + ((z - z * z) / (2.0 * tau) - 0.5 * z) * std::log(tau) +
                kEulerGamma * (z * z - z) / (2.0 * tau) + ln_gamma(z) + prod.log_value;
    out.residual = prod.residual;
    out.terms = prod.terms;
    return out;
}

ShintaniCheck general_shintani_check(double w, double a, double a2, double h, int terms) {
    if (!(w > 0.0) || !(a > 0.0) || !(a2 > 0.0) || !(h > 0.0))
        throw DomainError("general_shintani_check: arguments must be positive");
    const double c[4] = {-1.0, 3.0, -3.0, 1.0};
    const double pair[2] = {a, a2};
    const double single[1] = {a};
    ShintaniCheck out;
    for (int j = 0; j < 4; ++j) {
        double wj = w + j * h;
        out.direct += c[j] * (log_multiple_gamma(pair, wj) - log_multiple_gamma(single, wj));
    }
    // sum_k Delta^3 lnGamma((w + k a2)/a); the linear part of log Gamma_1 drops out
    auto log_term = [&](long k) {
        double x = (w + k * a2) / a;
        double s = 0.0;
        for (int j = 1; j < 4; ++j) s += c[j] * ln_gamma_ratio(x, j * h / a);
        return s;
    };
    const int order = 8;
    std::vector<double> model(order, 0.0);
    for (int j = 0; j < 4; ++j) {
        auto cj = ln_gamma_tail_coeffs(a2 / a, (w + j * h) / a, order);
        for (int k = 0; k < order; ++k) model[k] += c[j] * cj[k];
    }
    if (std::abs(model[0]) < 1e-12) model[0] = 0.0;
    ProductTruncation trunc;
    trunc.max_terms = terms;
    trunc.tail_order = order - 1;
    trunc.target_rel_error = 1e-4;
    auto prod = truncated_product(log_term, trunc, model);
    out.product = prod.log_value;
    out.residual_bound = prod.residual;
    return out;
}

IntegralCheck ratio_G_integral(double q, double a, double tau) {
    if (!(tau > 0.0) || !(a > -tau) || !(q < 1.0 + a + tau))
        throw DomainError("ratio_G_integral: need tau > 0, a > -tau, q < 1 + a + tau");
    IntegralCheck out;
    if (q != 0.0) {
        auto g = [&](auto x) {
            return ex(-a * x) / em1(tau * x) *
                   (em1(q * x) / em1(x) - q - 0.5 * (q * q - q) * x) / x;
        };
        QuadratureConfig cfg;
        cfg.decay_rate = std::min(a + tau, a + tau + 1.0 - q);
        double t0 = std::min(0.5, 1.0 / (1.0 + tau + std::abs(a) + std::abs(q)));
        out.integral = integrate_with_series<double>(g, t0, cfg).value;
    }
    out.closed = log_G_ratio(1.0 + a + tau, 1.0 - q + a + tau, tau).real() -
                 q * ln_gamma(1.0 + a / tau) + (q * q - q) / (2.0 * tau) * digamma(1.0 + a / tau);
    out.residual = std::abs(out.integral - out.closed);
    return out;
}

double ratio_G_integral_asymptotic(double q, double a, double tau, int rmax) {
    double s = 0.0;
    for (int r = 1; r <= rmax; ++r) {
        double b = (bernoulli_poly(r + 2, q) - bernoulli_number(r + 2)) / (r + 2.0);
        s += hurwitz_zeta(r + 1.0, 1.0 + a) / (r + 1.0) * b / std::pow(tau, r + 1.0);
    }
    return s;
}

IntegralCheck g_ratio_identity_check(double q, double b, double c, double d, double tau) {
    if (!(b > 0.0) || !(c > 0.0) || !(d > 0.0) || !(tau > 0.0) || !(q < b))
        throw DomainError("g_ratio_identity_check: need b, c, d, tau > 0 and q < b");
    IntegralCheck out;
    if (q != 0.0) {
        auto g = [&](auto x) {
            return ex(-b * x) * em1(-c * x) * em1(-d * x) * em1(q * x) /
                   (em1(-x) * em1(-tau * x) * x);
        };
        QuadratureConfig cfg;
        cfg.decay_rate = b - std::max(q, 0.0);
        double t0 = std::min(0.5, 1.0 / (1.0 + tau + b + c + d + std::abs(q)));
        out.integral = integrate_with_series<double>(g, t0, cfg).value;
    }
    out.closed = (log_G_ratio(b, b - q, tau) + log_G_ratio(b - q + c, b + c, tau) +
                  log_G_ratio(b - q + d, b + d, tau) + log_G_ratio(b + c + d, b - q + c + d, tau))
                     .real();
    out.residual = std::abs(out.integral - out.closed);
    return out;
}

double barnes_multiplication_check(double w, double a1, double a2, int k) {
    if (!(w > 0.0) || k < 1) throw DomainError("barnes_multiplication_check: need w > 0, k >= 1");
    const double a[2] = {a1, a2};
    double lhs = log_multiple_gamma(a, k * w);
    BernoulliSpec spec{2, 2, {a1, a2}};
    double rhs = -multiple_bernoulli(spec, k * w) / 2.0 * std::log(double(k));
    for (int p1 = 0; p1 < k; ++p1)
        for (int p2 = 0; p2 < k; ++p2) rhs += log_multiple_gamma(a, w + (p1 * a1 + p2 * a2) / k);
    return std::abs(lhs - rhs);
}

}  // namespace gmclab
