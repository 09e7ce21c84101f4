#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/characters.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// Coefficients of the Chebyshev polynomial of the second kind U_k, with the
/// normalization U_k(2 cos t) = sin((k+1)t)/sin t. Entry j is the coefficient of X^j.
inline std::vector<Int> chebyshev_u_coefficients(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_u_coefficients: k must be >= 0");
    std::vector<Int> prev{Int(1)};          // U_0
    if (k == 0) return prev;
    std::vector<Int> cur{Int(0), Int(1)};   // U_1 = X
    for (int m = 2; m <= k; ++m) {
        std::vector<Int> next(static_cast<std::size_t>(m) + 1);
        for (std::size_t j = 0; j + 1 < next.size(); ++j) next[j + 1] = cur[j];  // X * U_{m-1}
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline double chebyshev_u(int k, double x) {
    double a = 1.0, b = x;  // U_0, U_1
    if (k == 0) return a;
    for (int m = 2; m <= k; ++m) {
        const double c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

/// Theta_k: the k-th moment of the scaled deviation (sqrt(n)/2)(lambda*(s) - Omega(s)),
/// computed exactly from interlacing moments:
///   Theta_k = sqrt(n) (p_{k+2}(lambda*) - p_{k+2}(Omega)) / ((k+1)(k+2)).
inline double deviation_moment(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("deviation_moment: k must be >= 0");
    const long long n = lambda.size();
    if (n < 1) throw std::invalid_argument("deviation_moment: lambda must be nonempty");
    const long double nn = static_cast<long double>(n);
    const long double scaled = static_cast<long double>(moment_p(lambda, k + 2).get_d()) /
                               std::pow(nn, static_cast<long double>(k + 2) / 2.0L);
    const long double omega = static_cast<long double>(lskv_moment(k + 2).get_d());
    return static_cast<double>(std::sqrt(nn) * (scaled - omega) /
                               (static_cast<long double>(k + 1) * static_cast<long double>(k + 2)));
}

/// Upsilon_k from precomputed Theta values (theta[j] = Theta_j, j <= k):
///   Upsilon_k = sum_m (-1)^m binom(k-m, m) Theta_{k-2m}.
inline double chebyshev_functional_from_thetas(const std::vector<double>& theta, int k) {
    if (k < 2) throw std::invalid_argument("chebyshev_functional: k must be >= 2");
    if (static_cast<int>(theta.size()) <= k) throw std::invalid_argument("chebyshev_functional: theta table too short");
    double total = 0.0;
    for (int m = 0; 2 * m <= k; ++m) {
        const double c = binomial_int(static_cast<unsigned long>(k - m), static_cast<unsigned long>(m)).get_d();
        const double term = c * theta[static_cast<std::size_t>(k - 2 * m)];
        total += (m % 2 == 0) ? term : -term;
    }
    return total;
}

/// Upsilon_k = (sqrt(n)/2) integral of U_k(s) (lambda*(s) - Omega(s)) ds, evaluated
/// through the finite Theta combination.
inline double chebyshev_functional(const Partition& lambda, int k) {
    if (k < 2) throw std::invalid_argument("chebyshev_functional: k must be >= 2");
    std::vector<double> theta(static_cast<std::size_t>(k) + 1, 0.0);
    for (int j = 1; j <= k; ++j) theta[static_cast<std::size_t>(j)] = deviation_moment(lambda, j);
    return chebyshev_functional_from_thetas(theta, k);
}

/// Deterministic part of the limiting Gelfand deviation field at s = 2 cos(theta).
inline double limit_process_mean(double theta) {
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument("limit_process_mean: theta must lie in [0, pi]");
    }
    return 0.5 - 2.0 * std::sin(theta) / std::numbers::pi;
}

/// Mean/variance of the limiting gaussian for one scaled observable.
struct CLTTarget {
    std::string observable;
    double mean = 0.0;
    double variance = 1.0;
};

/// e_k: limiting Gelfand mean of X_k = Sigma_k / n^{k/2}; 1 for odd k, 0 for even k.
inline double gelfand_limit_mean(int k) { return (k % 2 == 1) ? 1.0 : 0.0; }

/// Targets for the scaled central characters X_k and (under the Gelfand measure) the
/// Chebyshev functionals Upsilon_k: X_k ~ N(e_k, 2k) vs N(0, k), and
/// Upsilon_k ~ N(e_{k+1}/(k+1), 2/(k+1)).
inline std::vector<CLTTarget> clt_targets(MeasureKind measure, const std::vector<int>& ks,
                                          const std::vector<int>& upsilons = {}) {
    std::vector<CLTTarget> t;
    for (int k : ks) {
        if (measure == MeasureKind::gelfand) {
            t.push_back({"X" + std::to_string(k), gelfand_limit_mean(k), 2.0 * k});
        } else {
            t.push_back({"X" + std::to_string(k), 0.0, static_cast<double>(k)});
        }
    }
    if (measure == MeasureKind::gelfand) {
        for (int k : upsilons) {
            t.push_back({"upsilon_" + std::to_string(k), gelfand_limit_mean(k + 1) / (k + 1), 2.0 / (k + 1)});
        }
    }
    return t;
}

}  // namespace gelfand
