#pragma once

// Truncated Laurent series in one variable t, used to expand integrands
// near t = 0 where the direct formula cancels catastrophically.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gmclab/errors.hpp"

namespace gmclab {

template <class T>
class Laurent {
public:
    // sum_k c[k] t^(v+k), k < size(); terms of order >= v + size() are unknown.
    int v = 0;
    std::vector<T> c;

    Laurent() = default;
    Laurent(int val, std::vector<T> coeffs) : v(val), c(std::move(coeffs)) {}

    static Laurent variable(int degree) {
        Laurent s(1, std::vector<T>(degree, T(0)));
        s.c[0] = T(1);
        return s;
    }
    static Laurent constant(T x, int degree) {
        Laurent s(0, std::vector<T>(degree, T(0)));
        s.c[0] = x;
        return s;
    }

    int degree() const { return static_cast<int>(c.size()); }
    int order() const { return v + degree(); }

    T coeff(int power) const {
        int k = power - v;
        return (k >= 0 && k < degree()) ? c[k] : T(0);
    }

    // Drop leading coefficients that are zero up to roundoff.
    void normalize() {
        double scale = 0.0;
        for (auto& x : c) scale = std::max(scale, std::abs(x));
        int strip = 0;
        while (strip < degree() - 1 && std::abs(c[strip]) <= 1e-15 * scale) ++strip;
        if (strip == 0) return;
        c.erase(c.begin(), c.begin() + strip);
        c.resize(c.size() + strip, T(0));
        v += strip;
    }

    T eval(T t) const {
        T r = 0;
        for (int k = degree() - 1; k >= 0; --k) r = r * t + c[k];
        return r * std::pow(t, v);
    }

    // Integral over [0, t0]. Negative powers must have cancelled.
    T integrate_to(double t0) const {
        double scale = 0.0;
        for (auto& x : c) scale = std::max(scale, std::abs(x));
        T sum = 0;
        for (int k = 0; k < degree(); ++k) {
            int p = v + k;
            if (p < 0) {
                if (std::abs(c[k]) > 1e-11 * scale)
                    throw NumericalError("Laurent::integrate_to: non-integrable power at t = 0");
                continue;
            }
            sum += c[k] * std::pow(t0, p + 1) / double(p + 1);
        }
        return sum;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        int lo = std::min(a.v, b.v);
        int hi = std::min(a.order(), b.order());
        Laurent r(lo, std::vector<T>(std::max(hi - lo, 1), T(0)));
        for (int p = lo; p < hi; ++p) r.c[p - lo] = a.coeff(p) + b.coeff(p);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        int d = std::min(a.degree(), b.degree());
        Laurent r(a.v + b.v, std::vector<T>(d, T(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; i + j < d; ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }

    friend Laurent operator/(const Laurent& a, Laurent b) {
        b.normalize();
        if (b.c[0] == T(0)) throw NumericalError("Laurent: division by zero series");
        int d = std::min(a.degree(), b.degree());
        Laurent r(a.v - b.v, std::vector<T>(d, T(0)));
        for (int n = 0; n < d; ++n) {
            T acc = a.c[n];
            for (int k = 1; k <= n; ++k) acc -= b.c[k] * r.c[n - k];
            r.c[n] = acc / b.c[0];
        }
        return r;
    }

    template <class S>
    friend Laurent operator*(S s, Laurent a) {
        for (auto& x : a.c) x *= T(s);
        return a;
    }
    template <class S>
    friend Laurent operator*(Laurent a, S s) {
        return T(s) * a;
    }
    template <class S>
    friend Laurent operator/(Laurent a, S s) {
        for (auto& x : a.c) x /= T(s);
        return a;
    }
    template <class S>
    friend Laurent operator/(S s, const Laurent& a) {
        return constant(T(s), a.degree()) / a;
    }
    template <class S>
    friend Laurent operator+(Laurent a, S s) {
        return a + constant(T(s), a.degree());
    }
    template <class S>
    friend Laurent operator+(S s, Laurent a) {
        return a + constant(T(s), a.degree());
    }
    template <class S>
    friend Laurent operator-(Laurent a, S s) {
        return a + constant(-T(s), a.degree());
    }
    template <class S>
    friend Laurent operator-(S s, Laurent a) {
        return constant(T(s), a.degree()) - a;
    }
};

namespace detail {

// exp(s) - 1 for a series with v >= 1.
template <class T>
Laurent<T> expm1_small(const Laurent<T>& s) {
    int d = s.degree();
    // Work with absolute coefficients of t^0..t^{d-1}.
    std::vector<T> x(d, T(0));
    for (int p = 0; p < d; ++p) x[p] = s.coeff(p);
    // e = exp(x) via e' = x' e
    std::vector<T> e(d, T(0));
    e[0] = T(1);
    for (int n = 1; n < d; ++n) {
        T acc = 0;
        for (int k = 1; k <= n; ++k) acc += double(k) * x[k] * e[n - k];
        e[n] = acc / double(n);
    }
    e[0] = T(0);
    return Laurent<T>(0, std::move(e));
}

}  // namespace detail

template <class T>
Laurent<T> ex(const Laurent<T>& s) {
    if (s.v < 0) throw NumericalError("exp of a series with a pole");
    T c0 = s.coeff(0);
    Laurent<T> rest = s - c0;
    Laurent<T> e = detail::expm1_small(rest) + T(1);
    return std::exp(c0) * e;
}

template <class T>
Laurent<T> em1(const Laurent<T>& s) {
    if (s.v < 0) throw NumericalError("expm1 of a series with a pole");
    T c0 = s.coeff(0);
    if (c0 == T(0)) {
        Laurent<T> r = detail::expm1_small(s);
        r.normalize();
        return r;
    }
    return ex(s) - T(1);
}

inline double ex(double x) { return std::exp(x); }
inline double em1(double x) { return std::expm1(x); }
inline std::complex<double> ex(std::complex<double> z) { return std::exp(z); }
inline std::complex<double> em1(std::complex<double> z) {
    double x = z.real(), y = z.imag();
    if (y == 0.0) return {std::expm1(x), 0.0};
    double s = std::sin(0.5 * y);
    double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    return {re, std::exp(x) * std::sin(y)};
}

}  // namespace gmclab
