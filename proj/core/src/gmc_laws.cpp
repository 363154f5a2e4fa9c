#include "gmclab/gmc_laws.hpp"

#include <cmath>
#include <functional>

#include "gmclab/errors.hpp"
#include "gmclab/multigamma.hpp"
#include "gmclab/series.hpp"

namespace gmclab {

std::string to_string(Geometry g) { return g == Geometry::interval ? "interval" : "circle"; }

std::string to_string(Representation r) {
    switch (r) {
        case Representation::double_gamma: return "double_gamma";
        case Representation::infinite_product: return "infinite_product";
        case Representation::levy_khinchine: return "levy_khinchine";
        case Representation::asymptotic_series: return "asymptotic_series";
        case Representation::decomposition: return "decomposition";
    }
    return "?";
}

std::string to_string(ModGaussianVariant v) {
    switch (v) {
        case ModGaussianVariant::interval: return "interval";
        case ModGaussianVariant::circle: return "circle";
        case ModGaussianVariant::max_interval: return "max_interval";
        case ModGaussianVariant::max_circle: return "max_circle";
    }
    return "?";
}

void GMCLawParams::validate() const {
    if (!(tau > 1.0)) throw DomainError("law: need tau > 1, got " + std::to_string(tau));
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) throw DomainError("law: need lambda_i >= 0");
}

void ComplexSelbergParams::validate() const {
    if (!(tau > 1.0)) throw DomainError("complex Selberg: need tau > 1");
    if (!(lambda1 < 0.0) || !(lambda2 < 0.0)) throw DomainError("complex Selberg: need lambda_i < 0");
    if (!(1.0 + tau * (1.0 + lambda1) > 0.0) || !(1.0 + tau * (1.0 + lambda2) > 0.0))
        throw DomainError("complex Selberg: need 1 + tau(1 + lambda_i) > 0");
    if (!(1.0 + tau * (lambda1 + lambda2) < 0.0))
        throw DomainError("complex Selberg: need 1 + tau(lambda1 + lambda2) < 0");
    auto [lo, hi] = strip();
    if (!(lo < hi)) throw DomainError("complex Selberg: empty strip");
}

std::pair<double, double> ComplexSelbergParams::strip() const {
    double c = 1.0 + tau * (1.0 + lambda1 + lambda2);
    double lo = std::max(0.5 * c, c);
    double hi = std::min({tau, 1.0 + tau * (1.0 + lambda1), 1.0 + tau * (1.0 + lambda2)});
    return {lo, hi};
}

namespace {

// log Gamma_2(w + d | 1, tau) - log Gamma_2(w | 1, tau)
cplx R(double tau, cplx w, cplx d) {
    const double a[2] = {1.0, tau};
    return log_multiple_gamma_ratio(a, w, d);
}

cplx lsine(double tau, cplx w) {
    const double a[2] = {1.0, tau};
    return log_multiple_sine(a, w);
}

cplx lgam(cplx z) { return ln_gamma(z); }

void check_law_strip(cplx q, double tau) {
    if (!(q.real() < tau))
        throw DomainError("Mellin transform: need Re(q) < tau = " + std::to_string(tau));
}

cplx exp_checked(cplx l) { return std::exp(l); }

double wrap_residual(cplx d) {
    double im = std::remainder(d.imag(), 2.0 * kPi);
    return std::hypot(d.real(), im);
}

// Selberg Mellin without the (2 pi / Gamma(1 - 1/tau))^q factor; finite for
// tau < 1 as well, which the involution needs.
cplx reduced_selberg(cplx q, double tau, double l1, double l2) {
    return q / tau * std::log(tau) + R(tau, 1.0 + tau * (1.0 + l1), -q) +
           R(tau, 1.0 + tau * (1.0 + l2), -q) + R(tau, tau, -q) +
           R(tau, 2.0 - 2.0 * q + tau * (2.0 + l1 + l2), q);
}

cplx reduced_morris(cplx q, double tau, double l1, double l2) {
    return q / tau * std::log(tau) + R(tau, tau * (l1 + l2 + 1.0) + 1.0, -q) + R(tau, tau, -q) -
           R(tau, tau * (1.0 + l1) + 1.0, -q) - R(tau, tau * (1.0 + l2) + 1.0, -q);
}

// reduced_complex = log CM - q log(pi Gamma(1/tau) / Gamma(1 - 1/tau))
cplx reduced_complex(cplx q, double tau, double l1, double l2) {
    const double s = l1 + l2;
    return q / tau * std::log(tau) + lgam(1.0 - q / tau) + R(tau, 1.0 + tau * (1.0 + l1), -q) +
           R(tau, 1.0 + tau * (1.0 + l2), -q) + R(tau, 1.0 + tau, -q) +
           R(tau, 2.0 - 2.0 * q + tau * (2.0 + s), q) + R(tau, 1.0 + tau, q) +
           R(tau, -tau * l1, q) + R(tau, -tau * l2, q) - R(tau, q - 1.0 - tau * (1.0 + s), q);
}

MellinRepresentation finish(Representation kind, cplx log_value, double err, long terms = 0) {
    MellinRepresentation m;
    m.kind = kind;
    m.log_value = log_value;
    m.value = exp_checked(log_value);
    m.error_estimate = err;
    m.terms = terms;
    return m;
}

// Terms of the form lnGamma(alpha + m tau + d) - lnGamma(alpha + m tau).
struct GammaPair {
    cplx alpha;
    cplx d;
    double sign;
};

MellinRepresentation product_form(cplx prefactor, double tau, const std::vector<GammaPair>& pairs,
                                  cplx log_coeff, const ProductTruncation& trunc) {
    const int order = 8;
    auto log_term = [&](long m) {
        cplx s = log_coeff * std::log(m * tau);
        for (const auto& g : pairs) s += g.sign * ln_gamma_ratio(g.alpha + double(m) * tau, g.d);
        return s;
    };
    std::vector<cplx> model(order, 0.0);
    for (const auto& g : pairs) {
        auto c1 = ln_gamma_tail_coeffs(tau, g.alpha + g.d, order);
        auto c0 = ln_gamma_tail_coeffs(tau, g.alpha, order);
        for (int k = 0; k < order; ++k) model[k] += g.sign * (c1[k] - c0[k]);
    }
    if (std::abs(model[0]) < 1e-12) model[0] = 0.0;
    ProductTruncation t = trunc;
    t.tail_order = std::max(t.tail_order, order - 1);
    auto r = truncated_product(std::function<cplx(long)>(log_term), t, model, 1);
    // each term is a difference of O(|d| log(m tau)) pieces
    double scale = std::abs(log_coeff);
    for (const auto& g : pairs) scale += std::abs(g.d);
    double rounding = r.terms * 2.3e-16 * scale * std::log(std::max(2.0, r.terms * tau));
    return finish(Representation::infinite_product, prefactor + r.log_value, r.residual + rounding, r.terms);
}

QuadratureConfig lk_config(double decay) {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-13;
    cfg.decay_rate = decay;
    return cfg;
}

// Levy-Khinchine integrals without the linear drift term.
cplx circle_lk_integrals(cplx s, double tau, double l1, double l2) {
    const double c1 = 1.0 + tau * l1, c2 = 1.0 + tau * l2, c12 = 1.0 + tau * (l1 + l2);
    const double t0 = std::min(0.5, 1.0 / (tau + c1 + c2 + c12 + std::abs(s)));
    auto g1 = [&](auto x) {
        return em1(s * x) * ex(-tau * x) * em1(-c1 * x) * em1(-c2 * x) / (em1(-1.0 * x) * em1(-tau * x)) / x;
    };
    auto g2 = [&](auto x) {
        return (em1(s * x) - s * x) * ex(-(c12 + tau) * x) / (-em1(-tau * x)) / x;
    };
    cplx i1 = integrate_with_series<cplx>(g1, t0, lk_config(tau - s.real())).value;
    cplx i2 = integrate_with_series<cplx>(g2, t0, lk_config(tau + c12 - s.real())).value;
    return i1 + i2;
}

cplx interval_lk_integrals(cplx s, double tau, double l1, double l2) {
    const double a1 = 1.0 + tau * l1, a2 = 1.0 + tau * l2, c = 1.0 + tau * (1.0 + l1 + l2);
    const double t0 = std::min(0.5, 1.0 / (tau + a1 + a2 + c + std::abs(s)));
    auto g = [&](auto x) {
        auto k1 = ex(-tau * x) * (1.0 + ex(-a1 * x) + ex(-a2 * x) + ex(-(1.0 + c) * x)) /
                  (em1(-1.0 * x) * em1(-tau * x));
        auto k2 = ex(-(1.0 + tau + 0.5 * tau * (l1 + l2)) * x) / (em1(-0.5 * x) * em1(-0.5 * tau * x));
        return (em1(s * x) - s * x) * (k1 - k2) / x;
    };
    return integrate_with_series<cplx>(g, t0, lk_config(tau - s.real())).value;
}

cplx zeta_c(int p, double a) { return hurwitz_zeta(double(p), a); }

// (B_{p+1}(x) - B_{p+1}) / (p + 1)
cplx bsum(int p, cplx x) { return (bernoulli_poly(p + 1, x) - bernoulli_number(p + 1)) / double(p + 1); }

}  // namespace

// -- integer moments -----------------------------------------------------------

double selberg_moment_product(int n, const GMCLawParams& p) {
    p.validate();
    if (n < 0) throw DomainError("selberg_moment_product: n must be nonnegative");
    if (!(n < p.tau)) throw DomainError("selberg_moment_product: moment diverges for n >= tau");
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2;
    double s = 0.0;
    for (int k = 0; k < n; ++k)
        s += ln_gamma(1.0 - (k + 1) / t) + ln_gamma(1.0 + l1 - k / t) + ln_gamma(1.0 + l2 - k / t) -
             ln_gamma(1.0 - 1.0 / t) - ln_gamma(2.0 + l1 + l2 - (n + k - 1) / t);
    return std::exp(s);
}

double morris_moment_product(int n, const GMCLawParams& p) {
    p.validate();
    if (n < 0) throw DomainError("morris_moment_product: n must be nonnegative");
    if (!(n < p.tau)) throw DomainError("morris_moment_product: moment diverges for n >= tau");
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2;
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        s += ln_gamma(1.0 + l1 + l2 - j / t) + ln_gamma(1.0 - (j + 1) / t) - ln_gamma(1.0 + l1 - j / t) -
             ln_gamma(1.0 + l2 - j / t) - ln_gamma(1.0 - 1.0 / t);
    return std::exp(s);
}

double negative_moment_product(int n, const GMCLawParams& p) {
    p.validate();
    if (n < 0) throw DomainError("negative_moment_product: n must be nonnegative");
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2;
    double s = 0.0;
    if (p.geometry == Geometry::interval) {
        for (int k = 0; k < n; ++k)
            s += ln_gamma(2.0 + l1 + l2 + (n + 2 + k) / t) + ln_gamma(1.0 - 1.0 / t) -
                 ln_gamma(1.0 + l1 + (k + 1) / t) - ln_gamma(1.0 + l2 + (k + 1) / t) - ln_gamma(1.0 + k / t);
    } else {
        for (int j = 0; j < n; ++j)
            s += ln_gamma(1.0 + l1 + (j + 1) / t) + ln_gamma(1.0 + l2 + (j + 1) / t) + ln_gamma(1.0 - 1.0 / t) -
                 ln_gamma(1.0 + l1 + l2 + (j + 1) / t) - ln_gamma(1.0 + j / t);
    }
    return std::exp(s);
}

// -- Mellin transforms -----------------------------------------------------------

cplx log_selberg_gamma2(cplx q, double tau, double l1, double l2) {
    return q * (std::log(2.0 * kPi) - lgam(1.0 - 1.0 / tau)) + reduced_selberg(q, tau, l1, l2);
}

cplx log_morris_gamma2(cplx q, double tau, double l1, double l2) {
    return -q * lgam(1.0 - 1.0 / tau) + reduced_morris(q, tau, l1, l2);
}

double log_phibar(Geometry g, double l1, double l2) {
    if (g == Geometry::interval) return ln_beta(1.0 + l1, 1.0 + l2);
    return ln_gamma(1.0 + l1 + l2) - ln_gamma(1.0 + l1) - ln_gamma(1.0 + l2);
}

std::vector<cplx> intermittency_coefficients(Geometry g, cplx q, double l1, double l2, int pmax) {
    if (pmax < 1 || pmax > 20) throw DomainError("intermittency_coefficients: need 1 <= pmax <= 20");
    std::vector<cplx> c(pmax);
    for (int p = 1; p <= pmax; ++p) {
        const double z = riemann_zeta(double(p));
        cplx v;
        if (g == Geometry::interval) {
            v = (zeta_c(p, 1.0 + l1) + zeta_c(p, 1.0 + l2)) * bsum(p, q) - z * q + z * bsum(p, q + 1.0) -
                zeta_c(p, 2.0 + l1 + l2) * (bernoulli_poly(p + 1, 2.0 * q - 1.0) - bernoulli_poly(p + 1, q - 1.0)) /
                    double(p + 1);
        } else {
            v = (zeta_c(p, 1.0 + l1 + l2) - zeta_c(p, 1.0 + l1) - zeta_c(p, 1.0 + l2)) * bsum(p, q) +
                z * bsum(p, q + 1.0) - q * z;
        }
        c[p - 1] = v / (p * std::ldexp(1.0, p));
    }
    return c;
}

namespace {

MellinRepresentation asymptotic_form(cplx q, const GMCLawParams& p, int order) {
    auto c = intermittency_coefficients(p.geometry, q, p.lambda1, p.lambda2, order);
    const double mu = 2.0 / p.tau;
    cplx s = q * log_phibar(p.geometry, p.lambda1, p.lambda2);
    double mp = 1.0, last = 0.0;
    for (int k = 0; k < order; ++k) {
        mp *= mu;
        s += c[k] * mp;
        last = std::abs(c[k] * mp);
    }
    return finish(Representation::asymptotic_series, s, last);
}

}  // namespace

MellinRepresentation selberg_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                    const MellinOptions& opt) {
    p.validate();
    if (p.geometry != Geometry::interval) throw DomainError("selberg_mellin: needs the interval geometry");
    check_law_strip(q, p.tau);
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2, s = l1 + l2;
    switch (rep) {
        case Representation::double_gamma:
            return finish(rep, log_selberg_gamma2(q, t, l1, l2), 0.0);
        case Representation::infinite_product: {
            cplx pre = q * std::log(t) + lgam(1.0 - q / t) + lgam(2.0 - 2.0 * q + t * (1.0 + s)) -
                       q * lgam(1.0 - 1.0 / t) - lgam(2.0 - q + t * (1.0 + s));
            std::vector<GammaPair> pairs = {{1.0, -q, 1.0},
                                            {1.0 + t * l1, -q, 1.0},
                                            {1.0 + t * l2, -q, 1.0},
                                            {2.0 - 2.0 * q + t * s, q, 1.0}};
            return product_form(pre, t, pairs, 2.0 * q, opt.product);
        }
        case Representation::levy_khinchine: {
            // drift fixed by E[M] = phibar
            const double c1 = log_phibar(Geometry::interval, l1, l2) - interval_lk_integrals(1.0, t, l1, l2).real() -
                              0.5 * lognormal_variance(t);
            cplx v = q * c1 + 0.5 * lognormal_variance(t) * q * q + interval_lk_integrals(q, t, l1, l2);
            return finish(rep, v, 1e-11);
        }
        case Representation::asymptotic_series:
            return asymptotic_form(q, p, opt.asymptotic_order);
        case Representation::decomposition:
            return finish(rep, decomposition_log_mellin(q, p), 0.0);
    }
    throw DomainError("selberg_mellin: unknown representation");
}

MellinRepresentation morris_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                   const MellinOptions& opt) {
    p.validate();
    if (p.geometry != Geometry::circle) throw DomainError("morris_mellin: needs the circle geometry");
    check_law_strip(q, p.tau);
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2, s = l1 + l2;
    switch (rep) {
        case Representation::double_gamma:
            return finish(rep, log_morris_gamma2(q, t, l1, l2), 0.0);
        case Representation::infinite_product: {
            cplx pre = lgam(1.0 - q / t) - q * lgam(1.0 - 1.0 / t);
            std::vector<GammaPair> pairs = {{1.0, -q, 1.0},
                                            {1.0 + t * l1, -q, -1.0},
                                            {1.0 + t * l2, -q, -1.0},
                                            {1.0 + t * s, -q, 1.0}};
            return product_form(pre, t, pairs, 0.0, opt.product);
        }
        case Representation::levy_khinchine: {
            const double c1 = log_phibar(Geometry::circle, l1, l2) - circle_lk_integrals(1.0, t, l1, l2).real();
            return finish(rep, q * c1 + circle_lk_integrals(q, t, l1, l2), 1e-11);
        }
        case Representation::asymptotic_series:
            return asymptotic_form(q, p, opt.asymptotic_order);
        case Representation::decomposition:
            return finish(rep, decomposition_log_mellin(q, p), 0.0);
    }
    throw DomainError("morris_mellin: unknown representation");
}

MellinRepresentation law_mellin(cplx q, const GMCLawParams& p, Representation rep,
                                const MellinOptions& opt) {
    return p.geometry == Geometry::interval ? selberg_mellin(q, p, rep, opt) : morris_mellin(q, p, rep, opt);
}

// -- involution ------------------------------------------------------------------

double involution_residual(Geometry g, cplx q, double tau, double l1, double l2) {
    if (!(tau > 0.0)) throw DomainError("involution: need tau > 0");
    if (!(q.real() < tau) || !(q.real() < 1.0))
        throw DomainError("involution: need Re(q) < min(tau, 1) so both sides are in their strips");
    auto red = (g == Geometry::interval) ? reduced_selberg : reduced_morris;
    cplx lhs = red(q / tau, 1.0 / tau, tau * l1, tau * l2) + lgam(1.0 - q / tau);
    cplx rhs = red(q, tau, l1, l2) + lgam(1.0 - q);
    return wrap_residual(lhs - rhs);
}

double complex_involution_residual(cplx q, const ComplexSelbergParams& p) {
    p.validate();
    auto [lo, hi] = p.strip();
    if (!(q.real() > lo && q.real() < hi)) throw DomainError("complex involution: q outside the strip");
    const double t = p.tau;
    cplx lhs = reduced_complex(q / t, 1.0 / t, t * p.lambda1, t * p.lambda2) + lgam(1.0 - q / t);
    cplx rhs = reduced_complex(q, t, p.lambda1, p.lambda2) + lgam(1.0 - q);
    return wrap_residual(lhs - rhs);
}

// -- critical ---------------------------------------------------------------------

cplx log_critical_mellin(cplx q, Geometry g, double l1, double l2) {
    if (!(q.real() < 1.0)) throw DomainError("critical Mellin: need Re(q) < 1");
    auto G = [](cplx z) { return log_barnes_G(z, 1.0); };
    const double s = l1 + l2;
    if (g == Geometry::circle)
        return G(2.0 - q + l1) - G(2.0 + l1) + G(2.0 - q + l2) - G(2.0 + l2) + G(1.0) - G(1.0 - q) +
               G(2.0 + s) - G(2.0 - q + s);
    return G(2.0 + l1) - G(2.0 - q + l1) + G(2.0 + l2) - G(2.0 - q + l2) + G(1.0) - G(1.0 - q) +
           G(4.0 - 2.0 * q + s) - G(4.0 - q + s);
}

double critical_negative_moment(int l) {
    if (l < 0) throw DomainError("critical_negative_moment: l must be nonnegative");
    double s = 0.0;
    for (int k = 0; k < l; ++k)
        s += ln_gamma(4.0 + l + k) - 2.0 * ln_gamma(k + 2.0) - ln_gamma(k + 1.0);
    return std::exp(s);
}

// -- complex Selberg ----------------------------------------------------------------

cplx log_complex_selberg(cplx q, const ComplexSelbergParams& p, ComplexSelbergForm form) {
    p.validate();
    auto [lo, hi] = p.strip();
    if (!(q.real() > lo))
        throw DomainError("complex Selberg: Re(q) must exceed max((1+tau(1+l1+l2))/2, 1+tau(1+l1+l2)) = " +
                          std::to_string(lo));
    if (!(q.real() < hi))
        throw DomainError("complex Selberg: Re(q) must be below min(tau, 1+tau(1+l1), 1+tau(1+l2)) = " +
                          std::to_string(hi));
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2, s = l1 + l2;
    if (form == ComplexSelbergForm::gamma2)
        return q * (std::log(kPi) + lgam(1.0 / t) - lgam(1.0 - 1.0 / t)) + reduced_complex(q, t, l1, l2);
    auto S = [t](cplx w) { return lsine(t, w); };
    return 2.0 * log_selberg_gamma2(q, t, l1, l2) - lgam(1.0 + q) - q * std::log(4.0 * std::sin(kPi / t)) +
           S(1.0 - q + t * (1.0 + l1)) - S(1.0 + t * (1.0 + l1)) + S(1.0 - q + t * (1.0 + l2)) -
           S(1.0 + t * (1.0 + l2)) + S(t - q) - S(cplx(t)) + S(2.0 - q + t * (2.0 + s)) -
           S(2.0 - 2.0 * q + t * (2.0 + s));
}

double complex_selberg_integral(int n, const ComplexSelbergParams& p) {
    p.validate();
    if (n < 0) throw DomainError("complex_selberg_integral: n must be nonnegative");
    const double t = p.tau, l1 = p.lambda1, l2 = p.lambda2;
    double sel = 1.0, sn = 1.0, fact = 1.0;
    for (int k = 0; k < n; ++k) {
        sel *= std::tgamma(1.0 - (k + 1) / t) * std::tgamma(1.0 + l1 - k / t) * std::tgamma(1.0 + l2 - k / t) /
               (std::tgamma(1.0 - 1.0 / t) * std::tgamma(2.0 + l1 + l2 - (n + k - 1) / t));
        sn *= std::sin(kPi * (k + 1) / t) * std::sin(kPi * (1.0 + l1 - k / t)) * std::sin(kPi * (1.0 + l2 - k / t)) /
              (std::sin(kPi / t) * std::sin(kPi * (2.0 + l1 + l2 - (n + k - 1) / t)));
        fact *= (k + 1);
    }
    return sel * sel * sn / fact;
}

// -- IPR ------------------------------------------------------------------------------

namespace {
void check_ipr(double q, cplx s, double beta) {
    if (!(beta > 0.0) || !(beta < 1.0)) throw DomainError("IPR: need 0 < beta < 1");
    const double b2 = beta * beta;
    if (!(q < (1.0 + b2) / (2.0 * b2))) throw DomainError("IPR: need q < (1 + beta^2) / (2 beta^2)");
    double bound = std::min({1.0 / b2, 1.0 / b2 + 1.0 - 2.0 * q, 1.0 / b2 + 1.0 - q});
    if (!(s.real() < bound)) throw DomainError("IPR: Re(s) outside the validity range");
}
}  // namespace

cplx log_ipr_prediction(double q, cplx s, double beta, double N) {
    check_ipr(q, s, beta);
    const double b2 = beta * beta;
    return (1.0 + q * q * b2 + (1.0 + b2) * s) * std::log(N) + log_morris_gamma2(s, 1.0 / b2, -q * b2, -q * b2);
}

double log_ipr_negative(double q, int n, double beta, double N) {
    check_ipr(q, -double(n), beta);
    const double b2 = beta * beta;
    double s = (1.0 + q * q * b2 - (1.0 + b2) * n) * std::log(N);
    for (int j = 0; j < n; ++j)
        s += 2.0 * ln_gamma(1.0 - q * b2 + (j + 1) * b2) + ln_gamma(1.0 - b2) -
             ln_gamma(1.0 - 2.0 * q * b2 + (j + 1) * b2) - ln_gamma(1.0 + j * b2);
    return s;
}

double log_ipr_ratio(int n, double beta, double N) { return log_ipr_negative(double(n), n, beta, N); }

double ipr_exponent(int n, double beta) {
    const double b2 = beta * beta;
    return 1.0 + n * n * b2 - (1.0 + b2) * n;
}

// -- mod-Gaussian ---------------------------------------------------------------------

cplx log_mod_gaussian_limit(cplx q, double tau, ModGaussianVariant v) {
    auto G = [](cplx z) { return log_barnes_G(z, 1.0); };
    switch (v) {
        case ModGaussianVariant::interval:
        case ModGaussianVariant::circle: {
            if (!(tau > 1.0)) throw DomainError("mod-Gaussian limit: need tau > 1");
            if (!(q.real() > -(tau + 1.0) / 2.0) || !(q.real() < tau))
                throw DomainError("mod-Gaussian limit: need -(tau+1)/2 < Re(q) < tau");
            if (v == ModGaussianVariant::interval)
                return q * (std::log(2.0 * kPi) + std::log(tau) / tau - lgam(1.0 - 1.0 / tau)) -
                       R(tau, 1.0 + q + tau, q) + R(tau, 1.0 + tau, -q) + R(tau, tau, -q) +
                       R(tau, 2.0 + 2.0 * tau, q);
            return q * (std::log(tau) / tau - lgam(1.0 - 1.0 / tau)) + 3.0 * R(tau, 1.0 + tau, q) -
                   R(tau, 1.0 + tau, 2.0 * q) + R(tau, tau, -q);
        }
        case ModGaussianVariant::max_interval:
        case ModGaussianVariant::max_circle: {
            if (!(q.real() > -1.0) || !(q.real() < 1.0)) throw DomainError("mod-Gaussian limit: need -1 < Re(q) < 1");
            if (v == ModGaussianVariant::max_interval)
                return lgam(1.0 - q) + G(2.0 + 2.0 * q) - G(2.0 + q) + G(2.0) - G(2.0 - q) + G(1.0) - G(1.0 - q) +
                       G(4.0) - G(4.0 + q);
            return lgam(1.0 - q) + G(2.0 + 2.0 * q) + 2.0 * G(2.0) - 3.0 * G(2.0 + q) + G(1.0) - G(1.0 - q);
        }
    }
    throw DomainError("mod-Gaussian limit: unknown variant");
}

}  // namespace gmclab
