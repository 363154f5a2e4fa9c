#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gmclab/errors.hpp"
#include "gmclab/series.hpp"

namespace gmclab {

struct QuadratureConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    double split_point = 1.0;
    int max_subdivisions = 10;  // number of step halvings
    double decay_rate = 1.0;    // e^{-rate t} at infinity, sets the tail scale
};

template <class V>
struct QuadResult {
    V value{};
    double error = 0.0;
    int levels = 0;
};

namespace detail {

inline constexpr double kHalfPi = 1.5707963267948966;

template <class V>
double mag(const V& v) {
    return std::abs(v);
}

template <class V>
bool finite(const V& v) {
    if constexpr (std::is_same_v<V, double>)
        return std::isfinite(v);
    else
        return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Level loop shared by both mappings. node(s, &weight, &term) returns false
// once the node is outside the useful range.
template <class V, class Node>
QuadResult<V> levels_loop(Node&& node, const QuadratureConfig& cfg, const char* who) {
    constexpr double smax = 4.5;
    auto sweep = [&](double h, int first, int step) {
        V sum{};
        for (int k = first;; k += step) {
            double s = k * h;
            if (s > smax) break;
            V t{};
            if (!node(s, t)) break;
            sum += t;
        }
        for (int k = -first; ; k -= step) {
            if (k == 0) continue;
            double s = k * h;
            if (s < -smax) break;
            V t{};
            if (!node(s, t)) break;
            sum += t;
        }
        return sum;
    };
    double h = 0.5;
    V total = sweep(h, 0, 1);
    // k = 0 appears only once: sweep skips 0 on the negative side.
    V est = h * total;
    QuadResult<V> out;
    for (int level = 1; level <= cfg.max_subdivisions; ++level) {
        h *= 0.5;
        total += sweep(h, 1, 2);
        V next = h * total;
        double err = mag(next - est);
        est = next;
        out.levels = level;
        if (level >= 3 && err <= std::max(cfg.abs_tol, cfg.rel_tol * mag(next))) {
            out.value = next;
            out.error = err;
            return out;
        }
        out.error = err;
    }
    throw NumericalError(std::string(who) + ": no convergence, error estimate " +
                             std::to_string(out.error),
                         out.error);
}

}  // namespace detail

/// Tanh-sinh rule on [a, b]. Integrable endpoint singularities are fine;
/// f is never evaluated exactly at a or b.
template <class V, class F>
QuadResult<V> integrate_finite(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    const double half = 0.5 * (b - a);
    auto node = [&](double s, V& term) {
        double u = detail::kHalfPi * std::sinh(s);
        double ch = std::cosh(u);
        // distance from the nearer endpoint, computed without cancellation
        double dist = half * std::exp(-std::abs(u)) / ch;
        double w = half * detail::kHalfPi * std::cosh(s) / (ch * ch);
        if (!(w > 1e-300) || dist <= 0.0) return false;
        double x = (s < 0) ? a + dist : b - dist;
        if (x <= a || x >= b) return false;
        V fx = f(x);
        if (!detail::finite(fx)) throw NumericalError("integrate_finite: non-finite integrand");
        term = w * fx;
        return true;
    };
    return detail::levels_loop<V>(node, cfg, "integrate_finite");
}

/// Exp-sinh rule on [a, inf): t = a + scale * exp(pi/2 sinh s).
template <class V, class F>
QuadResult<V> integrate_tail(F&& f, double a, double scale, const QuadratureConfig& cfg = {}) {
    auto node = [&](double s, V& term) {
        double u = detail::kHalfPi * std::sinh(s);
        double e = std::exp(u);
        double dist = scale * e;
        double w = scale * detail::kHalfPi * std::cosh(s) * e;
        if (s < 0 && !(w > 1e-300)) return false;
        double x = a + dist;
        if (x <= a) return false;
        // e^{-80} is far below double precision relative to the bulk
        if (s > 0 && dist * cfg.decay_rate > 80.0) return false;
        V fx = f(x);
        if (!detail::finite(fx)) throw NumericalError("integrate_tail: non-finite integrand");
        term = w * fx;
        return true;
    };
    return detail::levels_loop<V>(node, cfg, "integrate_tail");
}

/// Integral over (0, inf) of an integrand decaying like e^{-decay_rate t};
/// zero_order is the declared leading power t^k at the origin (k >= -0.5).
template <class V, class F>
QuadResult<V> integrate_semi_infinite(F&& f, const QuadratureConfig& cfg, double zero_order = 0.0) {
    if (zero_order < -0.5) throw DomainError("integrate_semi_infinite: leading order below -1/2");
    if (!(cfg.split_point > 0.0) || !(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw DomainError("integrate_semi_infinite: invalid config");
    auto head = integrate_finite<V>(f, 0.0, cfg.split_point, cfg);
    auto tail = integrate_tail<V>(f, cfg.split_point, 1.0 / cfg.decay_rate, cfg);
    QuadResult<V> r;
    r.value = head.value + tail.value;
    r.error = head.error + tail.error;
    r.levels = std::max(head.levels, tail.levels);
    return r;
}

/// Integral over (0, inf) of a generic integrand g, written once as a
/// template so that it can be called with double/complex arguments and with
/// Laurent<V>. On (0, t0] the Laurent expansion is integrated exactly; the
/// rest goes to the exp-sinh rule.
template <class V, class G>
QuadResult<V> integrate_with_series(G&& g, double t0, const QuadratureConfig& cfg = {},
                                    int degree = 40) {
    auto t = Laurent<V>::variable(degree);
    Laurent<V> expansion = g(t);
    V head = expansion.integrate_to(t0);
    auto fx = [&](double x) -> V { return g(V(x)); };
    auto tail = integrate_tail<V>(fx, t0, std::max(t0, 1.0 / cfg.decay_rate), cfg);
    tail.value += head;
    return tail;
}

struct ProductTruncation {
    int max_terms = 10000;
    int tail_order = 2;
    double target_rel_error = 1e-5;
};

template <class V>
struct ProductResult {
    V log_value{};        // log of the truncated product times tail correction
    V log_partial{};      // log of the partial product alone
    V log_tail{};         // Euler-Maclaurin tail estimate
    double residual = 0;  // bound on |error| in log_value
    int terms = 0;
};

/// prod_{m=first}^{inf} term(m), given log term(m). The tail model lists
/// c_j (j = 1, 2, ...) with log term(m) ~ sum_j c_j / m^j; c_1 must vanish.
ProductResult<double> truncated_product(const std::function<double(long)>& log_term,
                                        const ProductTruncation& trunc,
                                        std::span<const double> tail_model, long first = 1);
ProductResult<std::complex<double>> truncated_product(
    const std::function<std::complex<double>(long)>& log_term, const ProductTruncation& trunc,
    std::span<const std::complex<double>> tail_model, long first = 1);

/// Coefficients of m^{-k}, k = 1..order, in the large-m expansion of
/// lnGamma(p m + alpha) - [(p m + alpha - 1/2) log(p m) - p m + log(2 pi)/2].
std::vector<double> ln_gamma_tail_coeffs(double p, double alpha, int order);
std::vector<std::complex<double>> ln_gamma_tail_coeffs(double p, std::complex<double> alpha,
                                                       int order);

struct AsymptoticResult {
    double value = 0.0;
    int truncation = 0;    // index of the last included term
    double error = 0.0;    // magnitude of the last included term
};

/// sum_{p>=1} c_p x^{-p}, truncated at the smallest term (or at machine
/// precision if the series converges).
AsymptoticResult evaluate_asymptotic(std::span<const double> coeffs, double x);

}  // namespace gmclab
