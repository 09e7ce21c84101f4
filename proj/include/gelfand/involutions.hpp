#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// I_n by the two-term recurrence I_n = I_{n-1} + (n-1) I_{n-2}.
inline Int involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution_count: n must be nonnegative");
    Int a = 1, b = 1;  // I_0, I_1
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        Int c = b + Int(m - 1) * a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

/// I_n by the closed sum over the number k of 2-cycles: sum n!/(k! (n-2k)! 2^k).
inline Int involution_count_closed_sum(int n) {
    if (n < 0) throw std::invalid_argument("involution_count_closed_sum: n must be nonnegative");
    Int total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        Int term = factorial(static_cast<unsigned long>(n));
        term /= factorial(static_cast<unsigned long>(k));
        term /= factorial(static_cast<unsigned long>(n - 2 * k));
        term /= pow_int(Int(2), static_cast<unsigned long>(k));
        total += term;
    }
    return total;
}

/// log of the saddle-point estimate (n/e)^{n/2} e^{sqrt(n) - 1/4} / sqrt(2).
inline double involution_count_estimate_log(long long n) {
    if (n < 1) throw std::invalid_argument("involution_count_estimate_log: n must be >= 1");
    const double x = static_cast<double>(n);
    return 0.5 * x * (std::log(x) - 1.0) + std::sqrt(x) - 0.25 - 0.5 * std::log(2.0);
}

inline double involution_count_estimate(long long n) { return std::exp(involution_count_estimate_log(n)); }

/// Cache of I_0..I_N (exact big integers up to a cutoff) together with the floating
/// ratio table r_m = I_{m-1}/I_m computed by the recurrence r_m = 1/(1 + (m-1) r_{m-1}).
/// Built once, then read-only shared.
class InvolutionCounter {
public:
    explicit InvolutionCounter(int nmax, int exact_cutoff = 2000)
        : exact_limit_(std::min(nmax, exact_cutoff)) {
        if (nmax < 0) throw std::invalid_argument("InvolutionCounter: nmax must be nonnegative");
        exact_.reserve(static_cast<std::size_t>(exact_limit_) + 1);
        exact_.push_back(Int(1));
        if (exact_limit_ >= 1) exact_.push_back(Int(1));
        for (int m = 2; m <= exact_limit_; ++m) {
            exact_.push_back(exact_[static_cast<std::size_t>(m - 1)] + Int(m - 1) * exact_[static_cast<std::size_t>(m - 2)]);
        }
        ratio_.assign(static_cast<std::size_t>(nmax) + 1, 0.0);
        if (nmax >= 1) ratio_[1] = 1.0;  // I_0 / I_1
        for (int m = 2; m <= nmax; ++m) {
            ratio_[static_cast<std::size_t>(m)] = 1.0 / (1.0 + static_cast<double>(m - 1) * ratio_[static_cast<std::size_t>(m - 1)]);
        }
    }

    int exact_limit() const { return exact_limit_; }
    int nmax() const { return static_cast<int>(ratio_.size()) - 1; }

    const Int& exact(int n) const {
        if (n < 0 || n > exact_limit_) throw std::invalid_argument("InvolutionCounter::exact: n outside the exact table");
        return exact_[static_cast<std::size_t>(n)];
    }

    /// r_m = I_{m-1}/I_m, for m in [1, nmax].
    double ratio(int m) const {
        if (m < 1 || m > nmax()) throw std::invalid_argument("InvolutionCounter::ratio: m outside the table");
        return ratio_[static_cast<std::size_t>(m)];
    }

private:
    int exact_limit_;
    std::vector<Int> exact_;
    std::vector<double> ratio_;
};

/// f(i, m): the number of ways m cycles of length i can arise in a square. The odd-i case
/// is evaluated with exact rationals and collapsed to an integer at the end.
inline Int f_factor(long long i, long long m) {
    if (i < 1 || m < 0) throw std::invalid_argument("f_factor: need i >= 1 and m >= 0");
    const bool i_even = (i % 2 == 0);
    if (i_even && m % 2 == 1) return Int(0);
    if (i_even) {
        Int r = factorial(static_cast<unsigned long>(m)) / factorial(static_cast<unsigned long>(m / 2));
        return r * pow_int(to_int(i / 2), static_cast<unsigned long>(m / 2));
    }
    Rat total = 0;
    const Rat half_i = make_rat(static_cast<long>(i), 2);
    for (long long k = 0; 2 * k <= m; ++k) {
        Rat term(factorial(static_cast<unsigned long>(m)));
        term /= Rat(factorial(static_cast<unsigned long>(m - 2 * k)) * factorial(static_cast<unsigned long>(k)));
        term *= pow_rat(half_i, static_cast<unsigned long>(k));
        total += term;
    }
    return require_integer(total, "f_factor");
}

/// Number of square roots of any permutation of the given cycle type: prod_i f(i, m_i).
inline Int square_root_count(const Partition& cycle_type) {
    Int r = 1;
    for (const auto& [v, m] : cycle_type.multiplicities()) {
        r *= f_factor(v, m);
        if (r == 0) return r;
    }
    return r;
}

// ---- permutation words (0-based images) and brute-force oracles ----

using Perm = std::vector<int>;

inline Perm compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
    Perm r(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[static_cast<std::size_t>(g[x])];
    return r;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

/// Canonical permutation of the given cycle type, cycles on consecutive integers.
inline Perm canonical_permutation(const Partition& type) {
    Perm p(static_cast<std::size_t>(type.size()));
    int pos = 0;
    for (int len : type.parts()) {
        for (int j = 0; j < len; ++j) p[static_cast<std::size_t>(pos + j)] = pos + (j + 1) % len;
        pos += len;
    }
    return p;
}

/// Exhaustive count of tau in S_n with tau^2 = sigma. Guarded at n <= 9.
inline long long brute_force_square_roots(const Perm& sigma) {
    const int n = static_cast<int>(sigma.size());
    if (n > 9) throw std::invalid_argument("brute_force_square_roots: refusing n > 9 (factorial enumeration)");
    Perm tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            ok = tau[static_cast<std::size_t>(tau[static_cast<std::size_t>(x)])] == sigma[static_cast<std::size_t>(x)];
        }
        if (ok) ++count;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return count;
}

/// One pass over S_n tallying the cycle type of tau^2; dividing by the class size
/// gives the per-permutation square-root count for every type at once.
inline std::map<Partition, Int> square_root_counts_by_type_brute(int n) {
    if (n > 9) throw std::invalid_argument("square_root_counts_by_type_brute: refusing n > 9");
    std::map<Partition, Int> tally;
    Perm tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    do {
        tally[cycle_type(compose(tau, tau))] += 1;
    } while (std::next_permutation(tau.begin(), tau.end()));
    const Int nfact = factorial(static_cast<unsigned long>(n));
    std::map<Partition, Int> per_sigma;
    for (const auto& t : partitions_of(n)) {
        const Int class_size = nfact / t.centralizer_order();
        auto it = tally.find(t);
        Int total = (it == tally.end()) ? Int(0) : it->second;
        if (total % class_size != 0) throw std::logic_error("square_root_counts_by_type_brute: tally not class-constant");
        per_sigma[t] = total / class_size;
    }
    return per_sigma;
}

}  // namespace gelfand
