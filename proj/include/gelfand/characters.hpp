#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/involutions.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

namespace detail {

/// All single border-strip removals of length k, in beta-set form: replace b[i] by
/// b[i] - k when that value is nonnegative and absent. The strip height equals the
/// number of beta values jumped over.
struct StripRemoval {
    Partition shape;
    int sign;  // (-1)^height
};

inline std::vector<StripRemoval> remove_strips(const Partition& lambda, int k) {
    std::vector<StripRemoval> out;
    const auto b = lambda.beta_set();  // strictly decreasing
    const int l = static_cast<int>(b.size());
    for (int i = 0; i < l; ++i) {
        const long long t = b[static_cast<std::size_t>(i)] - k;
        if (t < 0) continue;
        if (std::binary_search(b.rbegin(), b.rend(), t)) continue;
        int height = 0;
        std::vector<long long> nb = b;
        nb[static_cast<std::size_t>(i)] = t;
        for (int j = i + 1; j < l; ++j) {
            if (nb[static_cast<std::size_t>(j)] > t) ++height;
        }
        std::sort(nb.begin(), nb.end(), std::greater<long long>());
        std::vector<int> parts;
        for (int j = 0; j < l; ++j) {
            const long long part = nb[static_cast<std::size_t>(j)] - (l - 1 - j);
            if (part > 0) parts.push_back(static_cast<int>(part));
        }
        out.push_back(StripRemoval{Partition(std::move(parts)), (height % 2 == 0) ? 1 : -1});
    }
    return out;
}

}  // namespace detail

/// Murnaghan-Nakayama evaluation of the non-normalized irreducible characters of S_n,
/// memoized on (remaining shape, remaining cycle parts). The memo table is not
/// synchronized: keep an evaluator thread-confined, or share it read-only after a
/// single-threaded warm-up. The Monte Carlo path uses the stateless cyclic evaluator
/// below instead.
class CharacterEvaluator {
public:
    /// sigma^lambda(mu) with |lambda| = |mu|.
    Int character(const Partition& lambda, const Partition& mu) {
        if (lambda.size() != mu.size()) {
            throw std::invalid_argument("character: |lambda| and |mu| must agree");
        }
        return eval(lambda, mu);
    }

    /// chi^lambda(mu) = sigma^lambda(mu) / dim lambda.
    Rat normalized(const Partition& lambda, const Partition& mu) {
        return Rat(character(lambda, mu)) / Rat(dim_exact(lambda));
    }

private:
    Int eval(const Partition& lambda, const Partition& mu) {
        if (lambda.empty()) return Int(1);
        const auto key = std::make_pair(lambda.parts(), mu.parts());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        // remove the largest cycle first
        const int k = mu.parts().front();
        Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        Int total = 0;
        for (const auto& removal : detail::remove_strips(lambda, k)) {
            total += Int(removal.sign) * eval(removal.shape, rest);
        }
        memo_.emplace(key, total);
        return memo_.at(key);
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo_;
};

/// Central character Sigma_mu(lambda) = n^{falling |mu|} chi^lambda(mu + fixed points),
/// and 0 when |lambda| < |mu|. Exact rational.
inline Rat central_character(CharacterEvaluator& ev, const Partition& lambda, const Partition& mu) {
    const long long n = lambda.size();
    const long long k = mu.size();
    if (n < k) return Rat(0);
    std::vector<int> padded = mu.parts();
    padded.insert(padded.end(), static_cast<std::size_t>(n - k), 1);
    Rat r(falling_factorial(n, static_cast<unsigned long>(k)));
    r *= ev.normalized(lambda, Partition(std::move(padded)));
    return r;
}

/// Sigma_k(lambda) for a single k-cycle, by summing over single border-strip removals
/// in beta-set form:
///   Sigma_k = sum over valid i of  b_i (b_i-1)...(b_i-k+1) * prod_{j != i} (b_i-k-b_j)/(b_i-b_j);
/// the sign of the ratio product is exactly the Murnaghan-Nakayama strip sign, and the
/// falling factorial absorbs n^{falling k} (n-k)!/n! together with the hook ratio.
/// Instantiate with Rat for exact values or long double for the Monte Carlo loop.
template <typename Scalar>
Scalar central_character_cyclic(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("central_character_cyclic: k must be >= 1");
    const long long n = lambda.size();
    if (k > n) return Scalar(0);  // matches the definition of Sigma_mu for |mu| > |lambda|
    if (lambda.length() > lambda[0]) {
        // evaluate on the conjugate: chi^lambda' = sign * chi^lambda on a k-cycle class
        const Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);
        return sign * central_character_cyclic<Scalar>(lambda.conjugate(), k);
    }
    const auto b = lambda.beta_set();
    const int l = static_cast<int>(b.size());
    Scalar total(0);
    for (int i = 0; i < l; ++i) {
        const long long t = b[static_cast<std::size_t>(i)] - k;
        if (t < 0) continue;
        if (std::binary_search(b.rbegin(), b.rend(), t)) continue;
        Scalar term(1);
        for (long long v = t + 1; v <= b[static_cast<std::size_t>(i)]; ++v) term *= Scalar(static_cast<long>(v));
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            term *= Scalar(static_cast<long>(t - b[static_cast<std::size_t>(j)]));
            term /= Scalar(static_cast<long>(b[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(j)]));
        }
        total += term;
    }
    return total;
}

inline double central_character_cyclic_large(const Partition& lambda, int k) {
    return static_cast<double>(central_character_cyclic<long double>(lambda, k));
}

enum class MeasureKind { gelfand, plancherel };

inline const char* measure_name(MeasureKind m) {
    return m == MeasureKind::gelfand ? "gelfand" : "plancherel";
}

inline MeasureKind parse_measure(const std::string& s) {
    if (s == "gelfand") return MeasureKind::gelfand;
    if (s == "plancherel") return MeasureKind::plancherel;
    throw std::invalid_argument("unknown measure: " + s);
}

/// Exact probability table of a measure on partitions of n.
struct MeasureTable {
    MeasureKind kind;
    int n;
    std::vector<std::pair<Partition, Rat>> rows;
};

inline MeasureTable measure_table(int n, MeasureKind kind) {
    if (n < 0) throw std::invalid_argument("measure_table: n must be nonnegative");
    if (n > 40) {
        throw std::invalid_argument(
            "measure_table: exact enumeration is capped at n = 40; use the sampling module for larger n");
    }
    MeasureTable table{kind, n, {}};
    const Int denom = (kind == MeasureKind::gelfand) ? involution_count(n) : factorial(static_cast<unsigned long>(n));
    Rat total = 0;
    for (auto& lambda : partitions_of(n)) {
        const Int d = dim_exact(lambda);
        Rat p = (kind == MeasureKind::gelfand) ? Rat(d) / Rat(denom) : Rat(d * d) / Rat(denom);
        total += p;
        table.rows.emplace_back(std::move(lambda), std::move(p));
    }
    if (total != 1) throw std::logic_error("measure_table: probabilities do not sum to 1");
    return table;
}

/// Closed formula for the Gelfand expectation of a central character:
///   G_n[Sigma_mu] = n^{falling |mu|} (I_{n-|mu|+m_1}/I_n) prod_{i>=2} f(i, m_i).
inline Rat gelfand_expectation_sigma(int n, const Partition& mu, const InvolutionCounter& counter) {
    if (n < 0) throw std::invalid_argument("gelfand_expectation_sigma: n must be nonnegative");
    const long long k = mu.size();
    if (n < k) return Rat(0);
    const int m1 = mu.multiplicity(1);
    Rat r(falling_factorial(n, static_cast<unsigned long>(k)));
    r *= Rat(counter.exact(static_cast<int>(n - k) + m1)) / Rat(counter.exact(n));
    for (const auto& [v, m] : mu.multiplicities()) {
        if (v >= 2) r *= Rat(f_factor(v, m));
    }
    return r;
}

/// Direct-summation route sum over lambda of G_n[lambda] Sigma_mu(lambda); the
/// independent cross-check for the closed formula (exact, n <= 40).
inline Rat gelfand_expectation_sigma_direct(int n, const Partition& mu, CharacterEvaluator& ev) {
    Rat total = 0;
    for (const auto& [lambda, prob] : measure_table(n, MeasureKind::gelfand).rows) {
        total += prob * central_character(ev, lambda, mu);
    }
    return total;
}

/// Leading term of G_n[Sigma_mu]: coefficient prod_{i>=2} f(i, m_i) and exponent
/// (|mu| + m_1)/2 (a half-integer in general).
struct AsymptoticExpectation {
    Int coefficient;
    Rat exponent;
};

inline AsymptoticExpectation asymptotic_expectation_sigma(const Partition& mu) {
    Int coeff = 1;
    for (const auto& [v, m] : mu.multiplicities()) {
        if (v >= 2) coeff *= f_factor(v, m);
    }
    return AsymptoticExpectation{std::move(coeff), make_rat(static_cast<long>(mu.size() + mu.multiplicity(1)), 2)};
}

}  // namespace gelfand
