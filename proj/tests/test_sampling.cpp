#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include <gelfand/characters.hpp>
#include <gelfand/chisq.hpp>
#include <gelfand/involutions.hpp>
#include <gelfand/partition.hpp>
#include <gelfand/rng.hpp>
#include <gelfand/sampling.hpp>

using namespace gelfand;

namespace {

/// All involutions of S_n by filtering full enumeration (test sizes only).
std::vector<Perm> all_involutions(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        bool inv = true;
        for (int i = 0; i < n && inv; ++i) inv = p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] == i;
        if (inv) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("random involutions square to the identity") {
    InvolutionCounter counter(64);
    Rng rng(5);
    for (int n : {0, 1, 2, 7, 23, 64}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto sigma = random_involution(n, rng, counter);
            REQUIRE(static_cast<int>(sigma.size()) == n);
            for (int i = 0; i < n; ++i) {
                REQUIRE(sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] == i);
            }
        }
    }
}

TEST_CASE("involution sampler is uniform (chi-squared at n = 4)") {
    InvolutionCounter counter(8);
    Rng rng(20240817);
    const int n = 4;
    const long long samples = 100000;
    std::map<std::vector<int>, long long> counts;
    for (long long i = 0; i < samples; ++i) ++counts[random_involution(n, rng, counter)];
    REQUIRE(counts.size() == 10);  // I_4 = 10 distinct involutions all seen
    std::vector<double> obs, expd;
    for (const auto& [inv, c] : counts) {
        obs.push_back(static_cast<double>(c));
        expd.push_back(static_cast<double>(samples) / 10.0);
    }
    const auto chi = pearson_chi_squared(obs, expd);
    REQUIRE(chi.pvalue > 1e-3);
}

TEST_CASE("random permutations are uniform at n = 3") {
    Rng rng(99);
    const long long samples = 60000;
    std::map<std::vector<int>, long long> counts;
    bool any_non_involution = false;
    for (long long i = 0; i < samples; ++i) {
        const auto w = random_permutation(3, rng);
        if (compose(w, w) != std::vector<int>{0, 1, 2}) any_non_involution = true;
        ++counts[w];
    }
    REQUIRE(any_non_involution);  // composition with itself is not generally the identity
    REQUIRE(counts.size() == 6);
    for (const auto& [w, c] : counts) {
        REQUIRE(std::abs(static_cast<double>(c) - 10000.0) < 300.0);  // within 3%
    }
}

TEST_CASE("RSK shapes of named words") {
    REQUIRE(rsk_shape({0, 1, 2, 3, 4}) == Partition({5}));
    REQUIRE(rsk_shape({4, 3, 2, 1, 0}) == Partition({1, 1, 1, 1, 1}));
    REQUIRE(rsk_shape({1, 0, 2}) == Partition({2, 1}));  // the transposition (1 2) in S_3
    REQUIRE(rsk_shape({}) == Partition());
    REQUIRE_THROWS_AS(rsk_shape({0, 0, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(rsk_shape({0, 3}), std::invalid_argument);
}

TEST_CASE("RSK shape distribution over whole symmetric groups") {
    // #permutations with shape lambda = (dim lambda)^2; #involutions with shape lambda = dim lambda
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, Int> perm_counts, inv_counts;
        Perm p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            ++perm_counts[rsk_shape(p)];
        } while (std::next_permutation(p.begin(), p.end()));
        for (const auto& sigma : all_involutions(n)) ++inv_counts[rsk_shape(sigma)];
        for (const auto& lambda : partitions_of(n)) {
            const Int d = dim_exact(lambda);
            REQUIRE(perm_counts[lambda] == d * d);
            REQUIRE(inv_counts[lambda] == d);
        }
    }
}

TEST_CASE("RSK pushforward of random involutions matches the exact Gelfand law") {
    InvolutionCounter counter(8);
    Rng rng(31415);
    const int n = 5;
    const long long samples = 100000;
    std::map<Partition, long long> counts;
    for (long long i = 0; i < samples; ++i) ++counts[rsk_shape(random_involution(n, rng, counter))];
    std::vector<double> obs, expd;
    for (const auto& [lambda, prob] : measure_table(n, MeasureKind::gelfand).rows) {
        obs.push_back(static_cast<double>(counts[lambda]));
        expd.push_back(prob.get_d() * static_cast<double>(samples));
    }
    const auto chi = pearson_chi_squared(obs, expd);
    REQUIRE(chi.pvalue > 1e-3);
}

TEST_CASE("sample statistics accumulator") {
    SampleStats stats({"a", "b"});
    const std::vector<std::vector<double>> rows = {{1.0, 2.0}, {2.0, 4.5}, {4.0, -1.0}, {0.5, 3.0}, {3.5, 0.0}};
    for (const auto& r : rows) stats.add(r);
    REQUIRE(stats.count() == 5);

    double ma = 0, mb = 0;
    for (const auto& r : rows) {
        ma += r[0];
        mb += r[1];
    }
    ma /= 5;
    mb /= 5;
    double va = 0, vb = 0, cab = 0;
    for (const auto& r : rows) {
        va += (r[0] - ma) * (r[0] - ma);
        vb += (r[1] - mb) * (r[1] - mb);
        cab += (r[0] - ma) * (r[1] - mb);
    }
    REQUIRE(stats.mean("a") == Catch::Approx(ma).epsilon(1e-12));
    REQUIRE(stats.variance("a") == Catch::Approx(va / 4).epsilon(1e-12));
    REQUIRE(stats.variance("b") == Catch::Approx(vb / 4).epsilon(1e-12));
    REQUIRE(stats.covariance("a", "b") == Catch::Approx(cab / 4).epsilon(1e-12));
    REQUIRE_THROWS_AS(stats.mean("c"), std::invalid_argument);

    // merge associativity / order independence
    SampleStats left({"a", "b"}), right({"a", "b"});
    for (std::size_t i = 0; i < 2; ++i) left.add(rows[i]);
    for (std::size_t i = 2; i < rows.size(); ++i) right.add(rows[i]);
    left.merge(right);
    REQUIRE(left.mean("a") == Catch::Approx(stats.mean("a")).epsilon(1e-10));
    REQUIRE(left.variance("b") == Catch::Approx(stats.variance("b")).epsilon(1e-10));
    REQUIRE(left.covariance("a", "b") == Catch::Approx(stats.covariance("a", "b")).epsilon(1e-10));

    SampleStats other({"a", "b"}), empty({"a", "b"});
    for (const auto& r : rows) other.add(r);
    other.merge(empty);
    REQUIRE(other.count() == 5);
    REQUIRE(other.variance("a") == Catch::Approx(stats.variance("a")).epsilon(1e-12));
}

TEST_CASE("experiments are deterministic and thread-schedule independent") {
    InvolutionCounter counter(60);
    ExperimentConfig cfg;
    cfg.measure = MeasureKind::gelfand;
    cfg.n = 60;
    cfg.trials = 40;
    cfg.seed = 123456;
    cfg.threads = 1;

    const auto a = run_experiment(cfg, counter);
    const auto b = run_experiment(cfg, counter);
    REQUIRE(a.rows == b.rows);

    cfg.threads = 3;
    const auto c = run_experiment(cfg, counter);
    REQUIRE(a.rows == c.rows);
    REQUIRE(a.final_shape == c.final_shape);

    std::ostringstream csv_a, csv_c;
    write_raw_csv(csv_a, a, cfg, "determinism check");
    write_raw_csv(csv_c, c, cfg, "determinism check");
    REQUIRE(csv_a.str() == csv_c.str());

    ExperimentConfig other = cfg;
    other.seed = 777;
    REQUIRE(run_experiment(other, counter).rows != a.rows);
}

TEST_CASE("Monte Carlo means agree with exact Gelfand expectations at n = 12") {
    const int n = 12;
    InvolutionCounter counter(n);
    Rng rng(2718281828);
    const long long trials = 20000;
    std::vector<double> sigma3;
    sigma3.reserve(trials);
    for (long long t = 0; t < trials; ++t) {
        const Partition shape = rsk_shape(random_involution(n, rng, counter));
        sigma3.push_back(central_character_cyclic_large(shape, 3));
    }
    double mean = 0;
    for (double v : sigma3) mean += v;
    mean /= static_cast<double>(trials);
    double var = 0;
    for (double v : sigma3) var += (v - mean) * (v - mean);
    var /= static_cast<double>(trials - 1);
    const double exact = gelfand_expectation_sigma(n, Partition({3}), counter).get_d();
    const double se = std::sqrt(var / static_cast<double>(trials));
    REQUIRE(std::abs(mean - exact) < 4.0 * se);
}

TEST_CASE("experiment guards") {
    InvolutionCounter counter(16);
    ExperimentConfig cfg;
    cfg.n = 0;
    REQUIRE_THROWS_AS(run_experiment(cfg, counter), std::invalid_argument);
    cfg.n = 16;
    cfg.trials = 0;
    REQUIRE_THROWS_AS(run_experiment(cfg, counter), std::invalid_argument);
    cfg.trials = 2;
    cfg.ks = {1};
    REQUIRE_THROWS_AS(run_experiment(cfg, counter), std::invalid_argument);
}
