#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gelfand/asymptotics.hpp"
#include "gelfand/characters.hpp"
#include "gelfand/diagram.hpp"
#include "gelfand/involutions.hpp"
#include "gelfand/partition.hpp"
#include "gelfand/rng.hpp"

namespace gelfand {

/// Exactly uniform involution of size n. Positions are processed right to left: the
/// largest unmatched element is a fixed point with probability I_{m-1}/I_m (m elements
/// still free), otherwise it is matched with a uniformly chosen other free element.
inline std::vector<int> random_involution(int n, Rng& rng, const InvolutionCounter& counter) {
    if (n < 0) throw std::invalid_argument("random_involution: n must be nonnegative");
    if (counter.nmax() < n) throw std::invalid_argument("random_involution: counter table too small");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> free_elems(static_cast<std::size_t>(n));
    std::iota(free_elems.begin(), free_elems.end(), 0);  // kept ascending
    while (free_elems.size() >= 2) {
        const int m = static_cast<int>(free_elems.size());
        const int e = free_elems.back();
        if (rng.unit() < counter.ratio(m)) {
            sigma[static_cast<std::size_t>(e)] = e;
            free_elems.pop_back();
        } else {
            const std::size_t j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m - 1)));
            const int f = free_elems[j];
            sigma[static_cast<std::size_t>(e)] = f;
            sigma[static_cast<std::size_t>(f)] = e;
            free_elems.pop_back();
            free_elems.erase(free_elems.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    return sigma;
}

/// Fisher-Yates shuffle, uniform on S_n.
inline std::vector<int> random_permutation(int n, Rng& rng) {
    if (n < 0) throw std::invalid_argument("random_permutation: n must be nonnegative");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    for (int i = n - 1; i >= 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(w[static_cast<std::size_t>(i)], w[j]);
    }
    return w;
}

/// Shape of the RSK insertion tableau of a permutation word (0-based images).
/// Row insertion with binary search; only P is kept (involutions have P = Q).
inline Partition rsk_shape(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x : word) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("rsk_shape: word is not a bijection on {0..n-1}");
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<std::vector<int>> rows;
    for (int x : word) {
        int carry = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({carry});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                break;
            }
            std::swap(*it, carry);
        }
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

/// One-pass accumulator of empirical moments: per column mean and central moments up to
/// order four, plus pairwise co-moments for covariances. Merging follows the standard
/// pairwise update formulas and is order-independent up to floating round-off.
class SampleStats {
public:
    SampleStats() = default;
    explicit SampleStats(std::vector<std::string> columns)
        : columns_(std::move(columns)),
          mean_(columns_.size(), 0.0),
          m2_(columns_.size(), 0.0),
          m3_(columns_.size(), 0.0),
          m4_(columns_.size(), 0.0),
          comoment_(columns_.size() * columns_.size(), 0.0) {}

    const std::vector<std::string>& columns() const { return columns_; }
    long long count() const { return count_; }

    int column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (columns_[i] == name) return static_cast<int>(i);
        }
        return -1;
    }

    void add(const std::vector<double>& row) {
        if (row.size() != columns_.size()) throw std::invalid_argument("SampleStats::add: row width mismatch");
        const double n1 = static_cast<double>(count_);
        const double n = n1 + 1.0;
        const std::size_t d = columns_.size();
        std::vector<double> delta(d);
        for (std::size_t i = 0; i < d; ++i) delta[i] = row[i] - mean_[i];
        for (std::size_t i = 0; i < d; ++i) {
            const double dn = delta[i] / n;
            const double term1 = delta[i] * dn * n1;
            mean_[i] += dn;
            m4_[i] += term1 * dn * dn * (n * n - 3.0 * n + 3.0) + 6.0 * dn * dn * m2_[i] - 4.0 * dn * m3_[i];
            m3_[i] += term1 * dn * (n - 2.0) - 3.0 * dn * m2_[i];
            m2_[i] += term1;
        }
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                comoment_[i * d + j] += delta[i] * delta[j] * n1 / n;
            }
        }
        ++count_;
    }

    void merge(const SampleStats& o) {
        if (o.columns_ != columns_) throw std::invalid_argument("SampleStats::merge: column mismatch");
        if (o.count_ == 0) return;
        if (count_ == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(count_), nb = static_cast<double>(o.count_);
        const double n = na + nb;
        const std::size_t d = columns_.size();
        std::vector<double> delta(d);
        for (std::size_t i = 0; i < d; ++i) delta[i] = o.mean_[i] - mean_[i];
        for (std::size_t i = 0; i < d; ++i) {
            const double dl = delta[i];
            m4_[i] = m4_[i] + o.m4_[i] + dl * dl * dl * dl * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                     6.0 * dl * dl * (na * na * o.m2_[i] + nb * nb * m2_[i]) / (n * n) +
                     4.0 * dl * (na * o.m3_[i] - nb * m3_[i]) / n;
            m3_[i] = m3_[i] + o.m3_[i] + dl * dl * dl * na * nb * (na - nb) / (n * n) +
                     3.0 * dl * (na * o.m2_[i] - nb * m2_[i]) / n;
            m2_[i] = m2_[i] + o.m2_[i] + dl * dl * na * nb / n;
        }
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                comoment_[i * d + j] += o.comoment_[i * d + j] + delta[i] * delta[j] * na * nb / n;
            }
        }
        for (std::size_t i = 0; i < d; ++i) mean_[i] = (na * mean_[i] + nb * o.mean_[i]) / n;
        count_ += o.count_;
    }

    double mean(int i) const { return mean_[static_cast<std::size_t>(i)]; }
    double variance(int i) const {  // unbiased
        if (count_ < 2) return 0.0;
        return m2_[static_cast<std::size_t>(i)] / static_cast<double>(count_ - 1);
    }
    double central_moment4(int i) const {
        if (count_ < 1) return 0.0;
        return m4_[static_cast<std::size_t>(i)] / static_cast<double>(count_);
    }
    double covariance(int i, int j) const {
        if (count_ < 2) return 0.0;
        if (i == j) return variance(i);
        const std::size_t a = static_cast<std::size_t>(std::min(i, j));
        const std::size_t b = static_cast<std::size_t>(std::max(i, j));
        return comoment_[a * columns_.size() + b] / static_cast<double>(count_ - 1);
    }
    double mean(const std::string& c) const { return mean(checked_index(c)); }
    double variance(const std::string& c) const { return variance(checked_index(c)); }
    double covariance(const std::string& a, const std::string& b) const {
        return covariance(checked_index(a), checked_index(b));
    }

private:
    int checked_index(const std::string& name) const {
        const int i = column_index(name);
        if (i < 0) throw std::invalid_argument("SampleStats: unknown column " + name);
        return i;
    }

    std::vector<std::string> columns_;
    long long count_ = 0;
    std::vector<double> mean_, m2_, m3_, m4_;
    std::vector<double> comoment_;  // upper triangle, row-major
};

struct ExperimentConfig {
    MeasureKind measure = MeasureKind::gelfand;
    int n = 100;
    long long trials = 100;
    std::uint64_t seed = 0;
    std::vector<int> ks = {2, 3, 4, 5};  // scaled central characters X_k
    int theta_max = 4;                   // deviation moments Theta_1..theta_max
    int upsilon_max = 5;                 // Chebyshev functionals Upsilon_2..upsilon_max
    int threads = 1;
    double grid_step = 1e-3;             // sup-distance grid
};

struct ExperimentResult {
    std::vector<std::string> columns;            // per-trial value columns
    std::vector<std::vector<double>> rows;       // rows[trial]
    SampleStats stats;                           // accumulated in trial order
    Partition final_shape;                       // shape sampled in the last trial
};

inline std::vector<std::string> experiment_columns(const ExperimentConfig& cfg) {
    std::vector<std::string> cols;
    for (int k : cfg.ks) cols.push_back("X" + std::to_string(k));
    cols.push_back("supdist");
    for (int k = 1; k <= cfg.theta_max; ++k) cols.push_back("theta_" + std::to_string(k));
    for (int k = 2; k <= cfg.upsilon_max; ++k) cols.push_back("upsilon_" + std::to_string(k));
    return cols;
}

/// Runs the Monte Carlo experiment: per trial, sample a word (uniform involution under
/// the Gelfand measure, uniform permutation under Plancherel), take the RSK shape and
/// evaluate the scaled observables. Per-trial RNG streams and a fixed accumulation
/// order make the output deterministic for a given seed, regardless of thread count.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const InvolutionCounter& counter) {
    if (cfg.n < 1 || cfg.n > 10000) throw std::invalid_argument("run_experiment: n must be in [1, 10^4]");
    if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
    for (int k : cfg.ks) {
        if (k < 2) throw std::invalid_argument("run_experiment: observable indices must be >= 2");
    }

    ExperimentResult result;
    result.columns = experiment_columns(cfg);
    result.rows.assign(static_cast<std::size_t>(cfg.trials), {});

    const ContinuousDiagram omega = ContinuousDiagram::lskv();
    Partition last_shape;

    auto run_trial = [&](long long t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        const std::vector<int> word = (cfg.measure == MeasureKind::gelfand)
                                          ? random_involution(cfg.n, rng, counter)
                                          : random_permutation(cfg.n, rng);
        const Partition shape = rsk_shape(word);
        std::vector<double> row;
        row.reserve(result.columns.size());
        const double n = static_cast<double>(cfg.n);
        for (int k : cfg.ks) {
            const double xk = central_character_cyclic_large(shape, k) / std::pow(n, 0.5 * k);
            row.push_back(xk);
        }
        row.push_back(sup_distance(rescale(shape, n), omega, cfg.grid_step).value);
        const int tmax = std::max(cfg.theta_max, cfg.upsilon_max);
        std::vector<double> theta(static_cast<std::size_t>(tmax) + 1, 0.0);
        for (int k = 1; k <= tmax; ++k) theta[static_cast<std::size_t>(k)] = deviation_moment(shape, k);
        for (int k = 1; k <= cfg.theta_max; ++k) row.push_back(theta[static_cast<std::size_t>(k)]);
        for (int k = 2; k <= cfg.upsilon_max; ++k) row.push_back(chebyshev_functional_from_thetas(theta, k));
        result.rows[static_cast<std::size_t>(t)] = std::move(row);
        return shape;
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || cfg.trials == 1) {
        for (long long t = 0; t < cfg.trials; ++t) last_shape = run_trial(t);
    } else {
        std::vector<std::thread> pool;
        std::vector<Partition> last_per_thread(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w]() {
                Partition mine;
                for (long long t = w; t < cfg.trials; t += threads) mine = run_trial(t);
                last_per_thread[static_cast<std::size_t>(w)] = std::move(mine);
            });
        }
        for (auto& th : pool) th.join();
        // the worker that ran trial trials-1
        last_shape = last_per_thread[static_cast<std::size_t>((cfg.trials - 1) % threads)];
    }
    result.final_shape = std::move(last_shape);

    result.stats = SampleStats(result.columns);
    for (const auto& row : result.rows) result.stats.add(row);
    return result;
}

/// Raw per-trial CSV, one row per trial; provenance lines are prefixed with '#'.
inline void write_raw_csv(std::ostream& os, const ExperimentResult& result, const ExperimentConfig& cfg,
                          const std::string& provenance) {
    if (!provenance.empty()) {
        std::istringstream is(provenance);
        std::string line;
        while (std::getline(is, line)) os << "# " << line << '\n';
    }
    os << "trial,n,measure";
    for (const auto& c : result.columns) os << ',' << c;
    os << '\n';
    char buf[40];
    for (std::size_t t = 0; t < result.rows.size(); ++t) {
        os << t << ',' << cfg.n << ',' << measure_name(cfg.measure);
        for (double v : result.rows[t]) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace gelfand
