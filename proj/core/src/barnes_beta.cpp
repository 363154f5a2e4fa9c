#include "gmclab/barnes_beta.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gmclab/errors.hpp"
#include "gmclab/multigamma.hpp"
#include "gmclab/series.hpp"

namespace gmclab {

namespace {

template <class T>
T unit_like(const T&) {
    return T(1.0);
}
template <class T>
Laurent<T> unit_like(const Laurent<T>& t) {
    return Laurent<T>::constant(T(1.0), t.degree());
}

// prod(1 - e^{-b_j t}) / prod(1 - e^{-a_i t}), j >= 1
template <class T>
T phi(const T& t, std::span<const double> a, std::span<const double> b) {
    T num = unit_like(t);
    for (std::size_t j = 1; j < b.size(); ++j) num = num * (-em1(-b[j] * t));
    T den = unit_like(t);
    for (double ai : a) den = den * (-em1(-ai * t));
    return num / den;
}

double prod(std::span<const double> x, std::size_t from = 0) {
    double p = 1.0;
    for (std::size_t i = from; i < x.size(); ++i) p *= x[i];
    return p;
}

std::vector<double> subset_sums(std::span<const double> b, std::vector<int>* signs) {
    const int N = static_cast<int>(b.size()) - 1;
    std::vector<double> xs;
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        double x = b[0];
        int p = 0;
        for (int j = 0; j < N; ++j)
            if (mask & (1u << j)) {
                x += b[j + 1];
                ++p;
            }
        xs.push_back(x);
        signs->push_back(p % 2 == 0 ? 1 : -1);
    }
    return xs;
}

std::vector<double> drop(std::span<const double> v, std::size_t i) {
    std::vector<double> r;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i) r.push_back(v[k]);
    return r;
}

void check_strip(const BarnesBetaParams& p, cplx q) {
    if (!(q.real() > -p.b[0]))
        throw DomainError("eta: need Re(q) > -b_0 = " + std::to_string(-p.b[0]));
}

}  // namespace

BetaVariant BarnesBetaParams::variant() const {
    if (M() <= N()) return BetaVariant::standard;
    if (N() == M() - 1) return BetaVariant::gamma_type;
    throw DomainError("Barnes beta: need M <= N or N = M - 1");
}

void BarnesBetaParams::validate() const {
    if (b.empty()) throw DomainError("Barnes beta: b must contain b_0");
    if (M() > 4) throw DomainError("Barnes beta: M > 4 is not supported");
    if (N() > 8) throw DomainError("Barnes beta: N > 8 is not supported");
    for (double x : a)
        if (!(x > 0.0)) throw DomainError("Barnes beta: a_i must be positive");
    for (double x : b)
        if (!(x > 0.0)) throw DomainError("Barnes beta: b_j must be positive");
    variant();
}

std::string BarnesBetaParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "M=" << M() << " N=" << N() << " a=(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ") b=(";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

cplx s_log_gamma(std::span<const double> a, cplx q, std::span<const double> b) {
    return s_operator<cplx>([&](cplx x) { return log_multiple_gamma(a, x); }, q, b);
}

cplx log_eta(const BarnesBetaParams& p, cplx q) {
    p.validate();
    check_strip(p, q);
    if (q == 0.0) return 0.0;
    std::vector<int> signs;
    auto xs = subset_sums(p.b, &signs);
    cplx s = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
        s += double(signs[k]) * log_multiple_gamma_ratio(p.a, cplx(xs[k]), q);
    return s;
}

double log_eta(const BarnesBetaParams& p, double q) { return log_eta(p, cplx(q)).real(); }

cplx eta_mellin(const BarnesBetaParams& p, cplx q) { return std::exp(log_eta(p, q)); }

cplx levy_khinchine_log_eta(const BarnesBetaParams& p, cplx q) {
    p.validate();
    check_strip(p, q);
    if (q == 0.0) return 0.0;
    const double b0 = p.b[0];
    double scale = b0 + std::abs(q);
    for (double x : p.a) scale += x;
    for (double x : p.b) scale += x;
    const double t0 = std::min(0.5, 1.0 / scale);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-13;
    cfg.decay_rate = b0 + std::min(q.real(), 0.0);
    if (p.variant() == BetaVariant::standard) {
        auto g = [&](auto t) { return em1(-q * t) * ex(-b0 * t) * phi(t, p.a, p.b) / t; };
        return integrate_with_series<cplx>(g, t0, cfg).value;
    }
    const double c = prod(p.b, 1) / prod(p.a);
    auto g1 = [&](auto t) {
        return (em1(-q * t) + q * t) * ex(-b0 * t) * phi(t, p.a, p.b) / t;
    };
    auto g2 = [&](auto t) { return ex(-1.0 * t) * c / t - ex(-b0 * t) * phi(t, p.a, p.b); };
    cplx first = integrate_with_series<cplx>(g1, t0, cfg).value;
    QuadratureConfig cfg2 = cfg;
    cfg2.decay_rate = std::min(1.0, b0);
    double second = integrate_with_series<double>(g2, t0, cfg2).value;
    return first + q * second;
}

double atom_mass_integral(const BarnesBetaParams& p) {
    p.validate();
    if (p.M() >= p.N()) throw DomainError("atom mass: only M < N has an atom at 1");
    const double b0 = p.b[0];
    auto g = [&](auto t) { return ex(-b0 * t) * phi(t, p.a, p.b) / t; };
    QuadratureConfig cfg;
    cfg.decay_rate = b0;
    double scale = b0;
    for (double x : p.a) scale += x;
    for (double x : p.b) scale += x;
    return std::exp(-integrate_with_series<double>(g, std::min(0.5, 1.0 / scale), cfg).value);
}

double atom_mass_closed(const BarnesBetaParams& p) {
    p.validate();
    if (p.M() >= p.N()) throw DomainError("atom mass: only M < N has an atom at 1");
    return std::exp(-s_log_gamma(p.a, 0.0, p.b).real());
}

double barnes_beta_moment(const BarnesBetaParams& p, int k, int sign) {
    p.validate();
    if (k < 0) throw DomainError("barnes_beta_moment: k must be nonnegative");
    if (sign != 1 && sign != -1) throw DomainError("barnes_beta_moment: sign must be +1 or -1");
    if (k == 0) return 1.0;
    std::size_t i = p.a.size();
    for (std::size_t j = 0; j < p.a.size(); ++j)
        if (p.a[j] == 1.0) {
            i = j;
            break;
        }
    if (i == p.a.size()) throw DomainError("barnes_beta_moment: needs a_i = 1 for some i");
    if (sign < 0 && !(k < p.b[0])) throw DomainError("barnes_beta_moment: negative moment needs k < b_0");
    auto ahat = drop(p.a, i);
    double s = 0.0;
    for (int l = 0; l < k; ++l) {
        if (sign > 0)
            s -= s_log_gamma(ahat, double(l), p.b).real();
        else
            s += s_log_gamma(ahat, -double(l + 1), p.b).real();
    }
    return std::exp(s);
}

double factorization_multiplicity(int k, int M) {
    // generalized binomial, so that C(-1, m) = (-1)^m at k = 0
    auto binom = [](double n, int r) {
        double c = 1.0;
        for (int j = 0; j < r; ++j) c *= (n - j) / (j + 1.0);
        return c;
    };
    if (M == 0) return k == 0 ? 1.0 : 0.0;
    double s = 0.0;
    for (int m = 1; m <= M; ++m) s += binom(k - 1.0, m - 1) * binom(double(M), m);
    return s;
}

namespace {

// Coefficients of k^{-n}, n = 1..order, of sum_S sign [log(k a + x_S) - log(k a + x_S + q)].
std::vector<double> log_linear_tail(const std::vector<double>& xs, const std::vector<int>& signs,
                                    double a, double q, int order) {
    std::vector<double> c(order, 0.0);
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k)
            s += signs[k] * (std::pow(xs[k], n) - std::pow(xs[k] + q, n));
        c[n - 1] = ((n % 2 == 1) ? 1.0 : -1.0) * s / (n * std::pow(a, n));
    }
    return c;
}

FactorizationResult finish(const ProductResult<double>& r) {
    FactorizationResult f;
    f.log_value = r.log_value;
    f.residual = r.residual;
    f.terms = r.terms;
    return f;
}

void zero_small_leading(std::vector<double>& model) {
    double scale = 0.0;
    for (double c : model) scale = std::max(scale, std::abs(c));
    if (!model.empty() && std::abs(model[0]) < 1e-10 * std::max(1.0, scale)) model[0] = 0.0;
}

}  // namespace

FactorizationResult barnes_factorization(const BarnesBetaParams& p, double q,
                                         const ProductTruncation& trunc, FactorizationKind kind) {
    p.validate();
    if (p.variant() != BetaVariant::standard)
        throw DomainError("barnes_factorization: standard variant (M <= N) only");
    check_strip(p, q);
    std::vector<int> signs;
    auto xs = subset_sums(p.b, &signs);
    const int M = p.M();
    const int order = 8;

    if (kind == FactorizationKind::special_a1) {
        for (double x : p.a)
            if (x != 1.0) throw DomainError("special_a1 factorization needs all a_i = 1");
        auto log_term = [&](long k) {
            double s = 0.0;
            for (std::size_t j = 0; j < xs.size(); ++j)
                s += signs[j] * std::log1p(q / (xs[j] + double(k)));
            return -factorization_multiplicity(static_cast<int>(k), M) * s;
        };
        // multiply the log tail by the multiplicity polynomial C(k+M-1, M-1)
        auto base = log_linear_tail(xs, signs, 1.0, q, order + M);
        std::vector<double> poly(1, 1.0);  // coefficients in k
        for (int j = 1; j < M; ++j) {
            std::vector<double> next(poly.size() + 1, 0.0);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] += poly[d] / j;
                next[d] += poly[d] * double(j) / j;
            }
            poly.swap(next);
        }
        std::vector<double> model(order, 0.0);
        for (int n = 1; n <= order; ++n)
            for (std::size_t d = 0; d < poly.size(); ++d)
                if (n + static_cast<int>(d) - 1 < static_cast<int>(base.size()))
                    model[n - 1] += poly[d] * base[n + d - 1];
        zero_small_leading(model);
        ProductTruncation t = trunc;
        t.tail_order = std::max(t.tail_order, order - 1);
        return finish(truncated_product(std::function<double(long)>(log_term), t, model, 0));
    }

    if (kind == FactorizationKind::shintani) {
        if (M < 1 || M > 2) throw DomainError("shintani factorization implemented for M = 1, 2");
        const double ai = p.a[0];
        auto ahat = drop(p.a, 0);
        std::function<double(long)> log_term;
        std::vector<double> model;
        if (M == 1) {
            log_term = [&](long k) {
                double s = 0.0;
                for (std::size_t j = 0; j < xs.size(); ++j)
                    s -= signs[j] * std::log1p(q / (k * ai + xs[j]));
                return s;
            };
            model = log_linear_tail(xs, signs, ai, q, order);
        } else {
            const double a1 = ahat[0];
            log_term = [&, a1](long k) {
                double s = 0.0;
                for (std::size_t j = 0; j < xs.size(); ++j) {
                    double w = k * ai + xs[j];
                    double r = (w > 0.0) ? ln_gamma_ratio(w / a1, q / a1)
                                         : ln_gamma((w + q) / a1) - ln_gamma(w / a1);
                    s += signs[j] * (q / a1 * std::log(a1) + r);
                }
                return s;
            };
            model.assign(order, 0.0);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                auto cq = ln_gamma_tail_coeffs(ai / a1, (xs[j] + q) / a1, order);
                auto c0 = ln_gamma_tail_coeffs(ai / a1, xs[j] / a1, order);
                for (int n = 0; n < order; ++n) model[n] += signs[j] * (cq[n] - c0[n]);
            }
        }
        zero_small_leading(model);
        ProductTruncation t = trunc;
        t.tail_order = std::max(t.tail_order, order - 1);
        return finish(truncated_product(log_term, t, model, 0));
    }

    // Barnes lattice product over Omega = sum n_i a_i <= R, plus the
    // leading-order tail integral of the lattice-point density.
    const double pa = prod(p.a);
    double fact = 1.0;
    for (int j = 2; j <= M; ++j) fact *= j;
    const double R = (M == 0) ? 0.0 : std::pow(trunc.max_terms * fact * pa, 1.0 / M);
    double sum = 0.0, comp = 0.0;
    long count = 0;
    std::function<void(int, double)> walk = [&](int dim, double omega) {
        if (dim == M) {
            double s = 0.0;
            for (std::size_t j = 0; j < xs.size(); ++j)
                s -= signs[j] * std::log1p(q / (xs[j] + omega));
            double y = s - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            ++count;
            return;
        }
        for (long n = 0; omega + n * p.a[dim] <= R || (M == 0); ++n) {
            walk(dim + 1, omega + n * p.a[dim]);
            if (M == 0) break;
        }
    };
    walk(0, 0.0);
    FactorizationResult f;
    f.terms = count;
    f.log_value = sum;
    if (M > 0) {
        const int N = p.N();
        double nf = 1.0;
        for (int j = 2; j <= N; ++j) nf *= j;
        double mf = fact / M;  // (M-1)!
        double tail = -nf * q * prod(p.b, 1) / (mf * pa) * std::pow(R, M - N - 1) / (N + 1 - M);
        f.log_value += tail;
        // the leading-order tail is itself off by a relative O(1/R)
        double spread = std::accumulate(p.a.begin(), p.a.end(), 0.0) +
                        std::accumulate(p.b.begin(), p.b.end(), 0.0) + std::abs(q);
        f.residual = std::abs(tail) * spread / R;
    }
    if (f.residual > trunc.target_rel_error)
        throw NumericalError("barnes factorization: tail estimate exceeds tolerance", f.residual);
    return f;
}

cplx log_ratio_mellin(const RatioParams& r, cplx q) {
    r.base.validate();
    if (r.base.variant() != BetaVariant::gamma_type)
        throw DomainError("ratio_mellin: base must be of gamma type (N = M - 1)");
    if (!(r.bbar0 > 0.0)) throw DomainError("ratio_mellin: bbar0 must be positive");
    if (!(q.real() > -r.base.b[0]) || !(q.real() < r.bbar0))
        throw DomainError("ratio_mellin: need -b_0 < Re(q) < bbar0");
    BarnesBetaParams bar = r.base;
    bar.b[0] = r.bbar0;
    return log_eta(r.base, q) + log_eta(bar, -q);
}

cplx log_ratio_mellin_sine(const RatioParams& r, cplx q) {
    r.base.validate();
    double asum = std::accumulate(r.base.a.begin(), r.base.a.end(), 0.0);
    double bsum = std::accumulate(r.base.b.begin(), r.base.b.end(), 0.0);
    if (std::abs(r.bbar0 - (asum - bsum)) > 1e-12 * std::max(1.0, asum))
        throw DomainError("ratio_mellin_sine: needs bbar0 = |a| - sum_j b_j");
    if (!(q.real() > -r.base.b[0]) || !(q.real() < r.bbar0))
        throw DomainError("ratio_mellin_sine: need -b_0 < Re(q) < bbar0");
    auto ls = [&](cplx x) { return log_multiple_sine(r.base.a, x); };
    return s_operator<cplx>(ls, cplx(0.0), r.base.b) - s_operator<cplx>(ls, q, r.base.b);
}

void write_csv(const SampleBatch& batch, std::ostream& os) {
    os << "# seed=" << batch.seed << " stream=" << batch.stream_id << " count=" << batch.count
       << " params_hash=" << std::hash<std::string>{}(batch.params) << " params=" << batch.params
       << "\nvalue\n";
    os.precision(17);
    for (double v : batch.values) os << v << '\n';
}

}  // namespace gmclab
