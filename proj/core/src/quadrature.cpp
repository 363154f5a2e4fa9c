#include "gmclab/quadrature.hpp"

#include <cmath>
#include <limits>

#include "gmclab/special.hpp"

namespace gmclab {

namespace {

template <class V>
ProductResult<V> truncated_product_impl(const std::function<V(long)>& log_term,
                                        const ProductTruncation& trunc,
                                        std::span<const V> tail_model, long first) {
    if (trunc.max_terms < 1) throw DomainError("truncated_product: max_terms must be >= 1");
    if (!(trunc.target_rel_error > 0.0))
        throw DomainError("truncated_product: target_rel_error must be positive");
    // Kahan summation: 10^4..10^6 terms of mixed size
    V sum{};
    V comp{};
    double mean_abs = 0.0;
    V last{};
    for (long k = 0; k < trunc.max_terms; ++k) {
        V x = log_term(first + k);
        last = x;
        mean_abs += std::abs(x);
        V y = x - comp;
        V t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const long next = first + trunc.max_terms;
    ProductResult<V> r;
    r.terms = trunc.max_terms;
    r.log_partial = sum;

    double scale = 0.0;
    for (const auto& c : tail_model) scale = std::max(scale, std::abs(c));
    if (!tail_model.empty() && std::abs(tail_model[0]) > 1e-12 * std::max(scale, 1.0))
        throw DomainError("truncated_product: log term(m) has a 1/m component, product diverges");

    V tail{};
    double last_correction = 0.0;
    const int jmax = std::min<int>(static_cast<int>(tail_model.size()), trunc.tail_order + 1);
    for (int j = 2; j <= jmax; ++j) {
        V term = tail_model[j - 1] * hurwitz_zeta(j, static_cast<double>(next));
        tail += term;
        if (std::abs(term) > 0.0) last_correction = std::abs(term);
    }
    r.log_tail = tail;
    r.log_value = sum + tail;
    // each log term may carry O(1) cancellation, so assume eps per term
    double rounding = std::numeric_limits<double>::epsilon() * (trunc.max_terms + mean_abs);
    if (jmax >= 2)
        r.residual = last_correction + rounding;
    else
        // no model: assume O(1/m^2) terms, whose tail is about m * term(m)
        r.residual = std::abs(last) * static_cast<double>(next) + rounding;
    if (r.residual > trunc.target_rel_error)
        throw NumericalError("truncated_product: tail estimate exceeds tolerance", r.residual);
    return r;
}

}  // namespace

ProductResult<double> truncated_product(const std::function<double(long)>& log_term,
                                        const ProductTruncation& trunc,
                                        std::span<const double> tail_model, long first) {
    return truncated_product_impl<double>(log_term, trunc, tail_model, first);
}

ProductResult<std::complex<double>> truncated_product(
    const std::function<std::complex<double>(long)>& log_term, const ProductTruncation& trunc,
    std::span<const std::complex<double>> tail_model, long first) {
    return truncated_product_impl<std::complex<double>>(log_term, trunc, tail_model, first);
}

std::vector<double> ln_gamma_tail_coeffs(double p, double alpha, int order) {
    std::vector<double> c(order, 0.0);
    double pk = 1.0;
    for (int k = 1; k <= order; ++k) {
        pk *= p;
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        c[k - 1] = sign * bernoulli_poly(k + 1, alpha) / (k * (k + 1.0) * pk);
    }
    return c;
}

std::vector<std::complex<double>> ln_gamma_tail_coeffs(double p, std::complex<double> alpha,
                                                       int order) {
    std::vector<std::complex<double>> c(order, 0.0);
    double pk = 1.0;
    for (int k = 1; k <= order; ++k) {
        pk *= p;
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        c[k - 1] = sign * bernoulli_poly(k + 1, alpha) / (k * (k + 1.0) * pk);
    }
    return c;
}

AsymptoticResult evaluate_asymptotic(std::span<const double> coeffs, double x) {
    if (!(x > 0.0)) throw DomainError("evaluate_asymptotic: x must be positive");
    AsymptoticResult r;
    double prev = std::numeric_limits<double>::infinity();
    int nonzero_seen = 0;
    double xp = 1.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        xp /= x;
        double term = coeffs[i] * xp;
        double a = std::abs(term);
        if (a == 0.0) {
            r.truncation = static_cast<int>(i) + 1;
            continue;
        }
        if (a > prev) {
            if (nonzero_seen == 1)
                throw NumericalError("evaluate_asymptotic: series diverges from the first term");
            break;
        }
        r.value += term;
        r.truncation = static_cast<int>(i) + 1;
        r.error = a;
        prev = a;
        ++nonzero_seen;
        if (a < std::numeric_limits<double>::epsilon() * std::abs(r.value)) break;
    }
    return r;
}

}  // namespace gmclab
