#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gelfand/bigint.hpp"

namespace gelfand {

/// Integer partition lambda_1 >= lambda_2 >= ... >= lambda_l >= 1.
/// Immutable after construction; the empty partition is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            }
            n_ += parts_[i];
        }
    }

    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    long long size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int part_or_zero(int i) const { return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// m_v(lambda): number of parts equal to v.
    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    /// All nonzero multiplicities, keyed by part value.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    Partition conjugate() const {
        if (empty()) return Partition();
        std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_) {
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(c));
    }

    /// First-column beta set b_i = lambda_i + l - i (1-indexed rows), strictly decreasing.
    std::vector<long long> beta_set() const {
        const int l = length();
        std::vector<long long> b(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) b[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)] + (l - 1 - i);
        return b;
    }

    Partition disjoint_union(const Partition& other) const {
        std::vector<int> all = parts_;
        all.insert(all.end(), other.parts_.begin(), other.parts_.end());
        return from_unsorted(std::move(all));
    }

    /// All hook lengths h(i,j) = lambda_i - j + lambda'_j - i + 1, row-major.
    std::vector<int> hook_lengths() const {
        std::vector<int> conj;
        if (!empty()) {
            conj.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_) {
                for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
            }
        }
        std::vector<int> hooks;
        hooks.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < length(); ++i) {
            for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) {
                hooks.push_back(parts_[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1);
            }
        }
        return hooks;
    }

    /// z_mu = prod_i i^{m_i} m_i!, the centralizer order of the conjugacy class mu.
    Int centralizer_order() const {
        Int z = 1;
        for (const auto& [v, m] : multiplicities()) {
            z *= pow_int(Int(v), static_cast<unsigned long>(m));
            z *= factorial(static_cast<unsigned long>(m));
        }
        return z;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    /// JSON-style rendering, e.g. "[7,6,4,4,3,1]".
    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    /// Comma-joined parts without brackets, e.g. "4,4,1,1" ("" for the empty partition).
    std::string key() const {
        std::string s = to_string();
        return s.substr(1, s.size() - 2);
    }

private:
    std::vector<int> parts_;
    long long n_ = 0;
};

/// Parses "7,6,4,4" or "[7,6,4,4]" (and "" / "[]" as the empty partition).
inline Partition parse_partition(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("parse_partition: unbalanced brackets in " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition::from_unsorted(std::move(parts));
}

/// All partitions of n, in descending lexicographic order of the part vectors.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Number of standard Young tableaux of shape lambda (hook length formula), exact.
inline Int dim_exact(const Partition& lambda) {
    Int d = factorial(static_cast<unsigned long>(lambda.size()));
    for (int h : lambda.hook_lengths()) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(h));
    return d;
}

/// log dim lambda via log-gamma; absolute error well under 1e-9 for n <= 1e4.
inline double log_dim(const Partition& lambda) {
    double r = std::lgamma(static_cast<double>(lambda.size()) + 1.0);
    for (int h : lambda.hook_lengths()) r -= std::log(static_cast<double>(h));
    return r;
}

}  // namespace gelfand
