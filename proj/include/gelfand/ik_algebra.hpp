#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

/// Kerov degree of the basis element Sigma_mu: |mu| + m_1(mu).
inline int kerov_degree(const Partition& mu) {
    return static_cast<int>(mu.size()) + mu.multiplicity(1);
}

/// Weight of Sigma_mu: |mu| + l(mu); always >= the Kerov degree.
inline int weight(const Partition& mu) {
    return static_cast<int>(mu.size()) + mu.length();
}

/// An element of the observable algebra written in the central-character basis:
/// a finitely supported map from index partitions to exact rational coefficients.
class SigmaElement {
public:
    SigmaElement() = default;

    static SigmaElement basis(Partition mu) {
        SigmaElement e;
        e.terms_.emplace(std::move(mu), Rat(1));
        return e;
    }

    static SigmaElement cyclic(int k) {
        if (k < 1) throw std::invalid_argument("SigmaElement::cyclic: k must be >= 1");
        return basis(Partition({k}));
    }

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Partition& mu, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SigmaElement& operator+=(const SigmaElement& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }

    SigmaElement scaled(const Rat& q) const {
        SigmaElement e;
        if (q == 0) return e;
        for (const auto& [mu, c] : terms_) e.terms_.emplace(mu, c * q);
        return e;
    }

    /// Maximal Kerov degree over the support (-1 for the zero element).
    int max_kerov_degree() const {
        int d = -1;
        for (const auto& [mu, c] : terms_) d = std::max(d, kerov_degree(mu));
        return d;
    }

    bool operator==(const SigmaElement& o) const { return terms_ == o.terms_; }

    /// Key/value form matching the JSON wire format, e.g. {"4,4": "1", "1,1,1,1": "24"}.
    std::map<std::string, std::string> serialized() const {
        std::map<std::string, std::string> out;
        for (const auto& [mu, c] : terms_) out[mu.key()] = c.get_str();
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [mu, c] : terms_) {
            if (!first) os << " + ";
            os << c.get_str() << "*S[" << mu.key() << "]";
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    std::map<Partition, Rat> terms_;
};

namespace detail {

/// Expansion of Sigma_mu * Sigma_k over the canonical representative of class mu on
/// {0..m-1}: enumerate all k-arrangements over a ground set of m+k points, classify the
/// product partial permutation by the cycle type of its support (supported fixed points
/// count as parts 1), then renormalize the raw counts by (m+k-|nu|)!/k! to obtain the
/// structure constants of the projective-limit algebra.
inline SigmaElement basis_times_cyclic(const Partition& mu, int k) {
    const int m = static_cast<int>(mu.size());
    const int ground = m + k;
    if (ground > 18) {
        throw std::invalid_argument("sigma_product: enumeration bound |mu| + k <= 18 exceeded");
    }
    std::vector<int> sigma(static_cast<std::size_t>(ground));
    std::iota(sigma.begin(), sigma.end(), 0);
    int pos = 0;
    for (int len : mu.parts()) {
        for (int j = 0; j < len; ++j) sigma[static_cast<std::size_t>(pos + j)] = pos + (j + 1) % len;
        pos += len;
    }

    std::map<Partition, long long> counts;
    std::vector<int> arrangement(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(ground), 0);
    std::vector<int> product(static_cast<std::size_t>(ground));
    std::vector<char> in_support(static_cast<std::size_t>(ground), 0);
    std::vector<char> visited(static_cast<std::size_t>(ground), 0);
    std::vector<int> cycle_lengths;

    auto classify = [&]() {
        // product applies the new cycle first, then sigma
        for (int x = 0; x < ground; ++x) product[static_cast<std::size_t>(x)] = sigma[static_cast<std::size_t>(x)];
        for (int j = 0; j < k; ++j) {
            const int x = arrangement[static_cast<std::size_t>(j)];
            product[static_cast<std::size_t>(x)] = sigma[static_cast<std::size_t>(arrangement[static_cast<std::size_t>((j + 1) % k)])];
        }
        std::fill(in_support.begin(), in_support.end(), 0);
        for (int x = 0; x < m; ++x) in_support[static_cast<std::size_t>(x)] = 1;
        for (int a : arrangement) in_support[static_cast<std::size_t>(a)] = 1;
        std::fill(visited.begin(), visited.end(), 0);
        cycle_lengths.clear();
        for (int s = 0; s < ground; ++s) {
            if (!in_support[static_cast<std::size_t>(s)] || visited[static_cast<std::size_t>(s)]) continue;
            int len = 0;
            int x = s;
            while (!visited[static_cast<std::size_t>(x)]) {
                visited[static_cast<std::size_t>(x)] = 1;
                x = product[static_cast<std::size_t>(x)];
                ++len;
            }
            cycle_lengths.push_back(len);
        }
        ++counts[Partition::from_unsorted(cycle_lengths)];
    };

    std::function<void(int)> enumerate = [&](int depth) {
        if (depth == k) {
            classify();
            return;
        }
        for (int v = 0; v < ground; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            arrangement[static_cast<std::size_t>(depth)] = v;
            enumerate(depth + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    enumerate(0);

    SigmaElement out;
    const Int kfact = factorial(static_cast<unsigned long>(k));
    for (const auto& [nu, cnt] : counts) {
        Rat c(to_int(cnt) * factorial(static_cast<unsigned long>(ground - nu.size())));
        c /= Rat(kfact);
        require_integer(c, "sigma_product structure constant");
        out.add_term(nu, c);
    }
    return out;
}

}  // namespace detail

/// Product of an element with the cyclic generator Sigma_k, term by term.
inline SigmaElement sigma_product(const SigmaElement& a, int k) {
    if (k < 1) throw std::invalid_argument("sigma_product: k must be >= 1");
    SigmaElement out;
    for (const auto& [mu, c] : a.terms()) {
        out += detail::basis_times_cyclic(mu, k).scaled(c);
    }
    return out;
}

/// (Sigma_k)^m by iterated products.
inline SigmaElement sigma_power(int k, int m) {
    if (m < 1) throw std::invalid_argument("sigma_power: m must be >= 1");
    SigmaElement e = SigmaElement::cyclic(k);
    for (int i = 1; i < m; ++i) e = sigma_product(e, k);
    return e;
}

/// Restriction of the coefficient map to index partitions of the given Kerov degree.
inline SigmaElement top_kerov_part(const SigmaElement& e, int degree) {
    SigmaElement out;
    for (const auto& [mu, c] : e.terms()) {
        if (kerov_degree(mu) == degree) out.add_term(mu, c);
    }
    return out;
}

/// Closed form of the top Kerov-degree component of (Sigma_k)^m:
///   sum_p m!/((m-2p)! p!) (k/2)^p Sigma_{1^{kp} k^{m-2p}}.
inline SigmaElement power_top_formula(int k, int m) {
    if (k < 2 || m < 1) throw std::invalid_argument("power_top_formula: need k >= 2, m >= 1");
    SigmaElement out;
    for (int p = 0; 2 * p <= m; ++p) {
        Rat coeff(factorial(static_cast<unsigned long>(m)));
        coeff /= Rat(factorial(static_cast<unsigned long>(m - 2 * p)) * factorial(static_cast<unsigned long>(p)));
        coeff *= pow_rat(make_rat(k, 2), static_cast<unsigned long>(p));
        require_integer(coeff, "power_top_formula coefficient");
        std::vector<int> parts(static_cast<std::size_t>(m - 2 * p), k);
        parts.insert(parts.end(), static_cast<std::size_t>(k * p), 1);
        out.add_term(Partition::from_unsorted(std::move(parts)), coeff);
    }
    return out;
}

/// Set partition of {1..r} with the Moebius value (-1)^{l-1} (l-1)! of the lattice
/// relative to its maximum.
struct SetPartition {
    std::vector<std::vector<int>> blocks;  // 1-based members, each block sorted

    int length() const { return static_cast<int>(blocks.size()); }

    Int mobius() const {
        const int l = length();
        Int v = factorial(static_cast<unsigned long>(l - 1));
        return (l % 2 == 1) ? v : -v;
    }
};

/// All Bell(r) set partitions of {1..r}.
inline std::vector<SetPartition> set_partitions(int r) {
    if (r < 1 || r > 10) throw std::invalid_argument("set_partitions: supported range is 1 <= r <= 10");
    std::vector<SetPartition> out;
    SetPartition cur;
    std::function<void(int)> rec = [&](int e) {
        if (e > r) {
            out.push_back(cur);
            return;
        }
        const std::size_t existing = cur.blocks.size();  // deeper calls append blocks
        for (std::size_t b = 0; b < existing; ++b) {
            cur.blocks[b].push_back(e);
            rec(e + 1);
            cur.blocks[b].pop_back();
        }
        cur.blocks.push_back({e});
        rec(e + 1);
        cur.blocks.pop_back();
    };
    rec(1);
    return out;
}

/// Alternating Moebius sum over set partitions of a multiplicity sequence
/// (r_1 ones, r_2 twos, ..., r_s values s):
///   sum_pi mu(pi) prod_j prod_{r_ij >= 1} F(i, r_ij),
/// which vanishes identically whenever s >= 2.
template <typename F>
Rat mobius_identity_check(F&& f, const std::vector<int>& multiplicities) {
    const int s = static_cast<int>(multiplicities.size());
    if (s < 2) throw std::invalid_argument("mobius_identity_check: the lemma requires s >= 2");
    int r = 0;
    for (int m : multiplicities) {
        if (m < 1) throw std::invalid_argument("mobius_identity_check: multiplicities must be >= 1");
        r += m;
    }
    if (r > 10) throw std::invalid_argument("mobius_identity_check: total length capped at 10");
    std::vector<int> value(static_cast<std::size_t>(r + 1), 0);
    int pos = 1;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < multiplicities[static_cast<std::size_t>(i)]; ++j) value[static_cast<std::size_t>(pos++)] = i + 1;
    }
    Rat total = 0;
    for (const auto& pi : set_partitions(r)) {
        Rat prod(pi.mobius());
        for (const auto& block : pi.blocks) {
            std::map<int, int> rij;
            for (int e : block) ++rij[value[static_cast<std::size_t>(e)]];
            for (const auto& [i, cnt] : rij) prod *= f(i, cnt);
        }
        total += prod;
    }
    return total;
}

/// Plug-in joint cumulant of the selected columns from raw per-trial samples, via the
/// Moebius formula over set partitions applied to empirical mixed moments.
inline double empirical_cumulant(const std::vector<std::vector<double>>& samples,
                                 const std::vector<int>& subset) {
    const int r = static_cast<int>(subset.size());
    if (r < 1 || r > 4) throw std::invalid_argument("empirical_cumulant: subset size must be in [1,4]");
    if (samples.size() < 2) throw std::invalid_argument("empirical_cumulant: need at least 2 trials");
    const double t = static_cast<double>(samples.size());
    auto mixed_moment = [&](const std::vector<int>& block) {
        double acc = 0.0;
        for (const auto& row : samples) {
            double prod = 1.0;
            for (int e : block) prod *= row.at(static_cast<std::size_t>(subset.at(static_cast<std::size_t>(e - 1))));
            acc += prod;
        }
        return acc / t;
    };
    double total = 0.0;
    for (const auto& pi : set_partitions(r)) {
        double prod = pi.mobius().get_d();
        for (const auto& block : pi.blocks) prod *= mixed_moment(block);
        total += prod;
    }
    return total;
}

}  // namespace gelfand
