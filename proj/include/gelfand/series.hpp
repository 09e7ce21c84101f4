#pragma once

#include <stdexcept>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// Dense truncated power series sum c[i] u^i over exact rationals.
struct RatSeries {
    std::vector<Rat> c;

    explicit RatSeries(int order) : c(static_cast<std::size_t>(order + 1)) {}
    int order() const { return static_cast<int>(c.size()) - 1; }
    Rat& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

inline RatSeries mul(const RatSeries& a, const RatSeries& b) {
    const int n = a.order();
    RatSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

/// 1 / a, requires a[0] != 0.
inline RatSeries reciprocal(const RatSeries& a) {
    if (a[0] == 0) throw std::invalid_argument("reciprocal: constant term vanishes");
    const int n = a.order();
    RatSeries r(n);
    r[0] = Rat(1) / a[0];
    for (int i = 1; i <= n; ++i) {
        Rat s = 0;
        for (int j = 1; j <= i; ++j) s += a[j] * r[i - j];
        r[i] = -s / a[0];
    }
    return r;
}

/// exp(a), requires a[0] == 0. Uses (exp a)' = a' exp a coefficient recursion.
inline RatSeries exp_series(const RatSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("exp_series: constant term must vanish");
    const int n = a.order();
    RatSeries r(n);
    r[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Rat s = 0;
        for (int j = 1; j <= i; ++j) s += Rat(j) * a[j] * r[i - j];
        r[i] = s / i;
    }
    return r;
}

/// Compositional inverse of a = u + a2 u^2 + ... (a[0] = 0, a[1] = 1):
/// returns h with a(h(u)) = u to the same truncation order.
inline RatSeries compositional_inverse(const RatSeries& a) {
    if (a[0] != 0 || a[1] != 1) {
        throw std::invalid_argument("compositional_inverse: series must start u + O(u^2)");
    }
    const int n = a.order();
    RatSeries h(n);
    h[1] = 1;
    // compose a with the partial h and cancel the lowest wrong coefficient, order by order
    for (int m = 2; m <= n; ++m) {
        // powers of current h up to order m
        RatSeries acc(n);
        acc[0] = 1;
        Rat val = 0;
        for (int j = 1; j <= m; ++j) {
            acc = mul(acc, h);
            val += a[j] * acc[m];
        }
        h[m] = -val;  // a(h)(m-th coeff) = val + h[m] since the j=1 term contributes h[m]
    }
    return h;
}

/// Coefficients g_1..g_order of G_lambda(z) = prod (z - y_i) / prod (z - x_i)
/// as a series sum g_j z^-j; g_1 = 1 and g_{j+1} is the j-th moment of the
/// transition measure.
inline std::vector<Rat> generating_function_series(const Partition& p, int order) {
    if (order < 1) throw std::invalid_argument("generating_function_series: order must be >= 1");
    const auto ic = interlacing_of(p);
    const int n = order;  // work with series in u = 1/z up to u^{order-1} after factoring u
    // num(u) = prod (1 - y_i u), den(u) = prod (1 - x_i u); G = u * num/den
    RatSeries num(n), den(n);
    num[0] = 1;
    den[0] = 1;
    auto mul_linear = [n](RatSeries& s, long long root) {
        for (int i = n; i >= 1; --i) s[i] -= Rat(static_cast<long>(root)) * s[i - 1];
    };
    for (long long y : ic.maxima) mul_linear(num, y);
    for (long long x : ic.minima) mul_linear(den, x);
    RatSeries g = mul(num, reciprocal(den));
    std::vector<Rat> out(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) out[static_cast<std::size_t>(j)] = g[j];
    return out;
}

/// Same coefficients from the exponential form G = (1/z) exp(sum p_k/k z^-k);
/// an independent route used for cross-checking.
inline std::vector<Rat> generating_function_series_exp_form(const Partition& p, int order) {
    if (order < 1) throw std::invalid_argument("generating_function_series_exp_form: order must be >= 1");
    RatSeries a(order - 1);
    for (int k = 1; k <= order - 1; ++k) a[k] = Rat(moment_p(p, k)) / k;
    RatSeries e = exp_series(a);
    std::vector<Rat> out(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) out[static_cast<std::size_t>(j)] = e[j];
    return out;
}

/// G_Omega(z) = (z - sqrt(z^2-4))/2 = sum Catalan_m z^-(2m+1).
inline std::vector<Rat> generating_function_series_lskv(int order) {
    if (order < 1) throw std::invalid_argument("generating_function_series_lskv: order must be >= 1");
    std::vector<Rat> out(static_cast<std::size_t>(order));
    for (int j = 1; j <= order; j += 2) {
        const unsigned long m = static_cast<unsigned long>((j - 1) / 2);
        Int cat = binomial_int(2 * m, m) / Int(m + 1);
        out[static_cast<std::size_t>(j - 1)] = Rat(cat);
    }
    return out;
}

/// Free cumulants R_2..R_kmax from the series coefficients g_1.. of a generating
/// function, by Lagrange inversion of G. Requires at least kmax + 1 coefficients.
inline std::vector<Rat> free_cumulants_from_series(const std::vector<Rat>& g, int kmax) {
    if (kmax < 2) throw std::invalid_argument("free_cumulants_from_series: kmax must be >= 2");
    if (static_cast<int>(g.size()) < kmax + 1) {
        throw std::invalid_argument("free_cumulants_from_series: insufficient series order");
    }
    const int n = kmax + 1;
    // ghat(v) = sum_j g_j v^j with v = 1/z; starts v + O(v^2)
    RatSeries ghat(n);
    for (int j = 1; j <= n; ++j) ghat[j] = g[static_cast<std::size_t>(j - 1)];
    if (ghat[1] != 1) throw std::invalid_argument("free_cumulants_from_series: g_1 must be 1");
    RatSeries h = compositional_inverse(ghat);
    // R(w) = 1/h(w) = (1/w)(1 + sum_k R_k w^k)  =>  w/h(w) = 1 + sum R_k w^k
    RatSeries hshift(n - 1);
    for (int i = 0; i <= n - 1; ++i) hshift[i] = h[i + 1];  // h / w
    RatSeries inv = reciprocal(hshift);
    if (inv[1] != 0) throw std::logic_error("free_cumulants_from_series: R_1 must be 0");
    std::vector<Rat> R(static_cast<std::size_t>(kmax - 1));
    for (int k = 2; k <= kmax; ++k) R[static_cast<std::size_t>(k - 2)] = inv[k];
    return R;
}

/// Free cumulants R_2..R_kmax of a partition's diagram (exact rationals).
inline std::vector<Rat> free_cumulants(const Partition& p, int kmax) {
    return free_cumulants_from_series(generating_function_series(p, kmax + 1), kmax);
}

/// Free cumulants of the LSKV curve: R_2 = 1, all higher cumulants vanish.
inline std::vector<Rat> free_cumulants_lskv(int kmax) {
    return free_cumulants_from_series(generating_function_series_lskv(kmax + 1), kmax);
}

/// Free cumulants kappa_1..kappa_kmax from raw moments m_1..m_kmax of a probability
/// measure, via the noncrossing-partition functional equation M(u) = C(u M(u)) with
/// M(u) = 1 + sum m_k u^k and C(u) = 1 + sum kappa_k u^k.
inline std::vector<Rat> free_cumulants_from_moments(const std::vector<Rat>& moments) {
    const int kmax = static_cast<int>(moments.size());
    RatSeries M(kmax);
    M[0] = 1;
    for (int k = 1; k <= kmax; ++k) M[k] = moments[static_cast<std::size_t>(k - 1)];
    // uM(u), and its powers (uM)^s truncated
    RatSeries uM(kmax);
    for (int k = 1; k <= kmax; ++k) uM[k] = M[k - 1];
    std::vector<Rat> kappa(static_cast<std::size_t>(kmax));
    std::vector<RatSeries> pw;  // pw[s] = (uM)^{s+1}
    pw.push_back(uM);
    for (int s = 2; s <= kmax; ++s) pw.push_back(mul(pw.back(), uM));
    for (int n = 1; n <= kmax; ++n) {
        Rat s = M[n];
        for (int j = 1; j < n; ++j) s -= kappa[static_cast<std::size_t>(j - 1)] * pw[static_cast<std::size_t>(j - 1)][n];
        // the j = n term is kappa_n * (uM)^n [u^n] = kappa_n
        kappa[static_cast<std::size_t>(n - 1)] = s;
    }
    return kappa;
}

}  // namespace gelfand
