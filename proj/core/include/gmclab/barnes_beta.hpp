#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gmclab/errors.hpp"
#include "gmclab/quadrature.hpp"
#include "gmclab/special.hpp"

namespace gmclab {

enum class BetaVariant { standard, gamma_type };

/// beta_{M,N}(a, b): a = (a_1..a_M), b = (b_0..b_N). Standard needs M <= N,
/// the gamma type needs N = M - 1.
struct BarnesBetaParams {
    std::vector<double> a;
    std::vector<double> b;

    int M() const { return static_cast<int>(a.size()); }
    int N() const { return static_cast<int>(b.size()) - 1; }
    BetaVariant variant() const;
    void validate() const;
    std::string describe() const;
};

/// Ratio beta_{M,M-1}(a,b) / beta_{M,M-1}(a,bbar) with bbar = (bbar0, b_1..).
struct RatioParams {
    BarnesBetaParams base;
    double bbar0 = 0.0;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    std::size_t count = 0;
    std::string params;
};

/// (S_N h)(q|b): alternating sum of h(q + b_0 + b_{k1} + ... + b_{kp}) over
/// all subsets {k1 < ... < kp} of {1..N}, sign (-1)^p.
template <class V, class H>
V s_operator(H&& h, V q, std::span<const double> b) {
    if (b.empty()) return V(0);
    const int N = static_cast<int>(b.size()) - 1;
    if (N > 8) throw DomainError("s_operator: N > 8 is not supported");
    V sum(0);
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        double x = b[0];
        int p = 0;
        for (int j = 0; j < N; ++j)
            if (mask & (1u << j)) {
                x += b[j + 1];
                ++p;
            }
        V term = h(q + x);
        sum += (p % 2 == 0) ? term : V(-term);
    }
    return sum;
}

/// (S_N log Gamma_M)(q | a, b).
cplx s_log_gamma(std::span<const double> a, cplx q, std::span<const double> b);

/// log eta_{M,N}(q|a,b), computed from Gamma_M ratios. Needs Re q > -b_0.
cplx log_eta(const BarnesBetaParams& p, cplx q);
double log_eta(const BarnesBetaParams& p, double q);
cplx eta_mellin(const BarnesBetaParams& p, cplx q);

/// log eta by quadrature of its Levy-Khinchine representation.
cplx levy_khinchine_log_eta(const BarnesBetaParams& p, cplx q);

/// P[beta = 1] for M < N, by quadrature and from the closed form.
double atom_mass_integral(const BarnesBetaParams& p);
double atom_mass_closed(const BarnesBetaParams& p);

/// E[beta^{sign k}] from the finite product formulas. Needs a_i = 1 for
/// some i, and k < b_0 for negative moments.
double barnes_beta_moment(const BarnesBetaParams& p, int k, int sign);

enum class FactorizationKind { shintani, barnes, special_a1 };

struct FactorizationResult {
    double log_value = 0.0;
    double residual = 0.0;
    long terms = 0;
};

/// log eta(q) from one of the infinite product factorizations (real q).
FactorizationResult barnes_factorization(const BarnesBetaParams& p, double q,
                                         const ProductTruncation& trunc, FactorizationKind kind);

/// Multiplicity (k|M) of the a_i = 1 Barnes factorization.
double factorization_multiplicity(int k, int M);

/// log of eta(q|a,b) eta(-q|a,bbar), -b_0 < Re q < bbar0.
cplx log_ratio_mellin(const RatioParams& r, cplx q);

/// Same quantity through multiple sine functions; needs bbar0 = |a| - sum b.
cplx log_ratio_mellin_sine(const RatioParams& r, cplx q);

/// i.i.d. samples of beta_{M,N}(a,b); deterministic in (seed, stream).
SampleBatch barnes_beta_sample(const BarnesBetaParams& p, std::size_t n, std::uint64_t seed,
                               std::uint64_t stream, int threads = 0);

/// One value per line after a commented header with seed/stream/params.
void write_csv(const SampleBatch& batch, std::ostream& os);

}  // namespace gmclab
