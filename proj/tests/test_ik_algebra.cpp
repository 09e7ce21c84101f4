#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include <gelfand/ik_algebra.hpp>
#include <gelfand/involutions.hpp>
#include <gelfand/partition.hpp>
#include <gelfand/rng.hpp>

using namespace gelfand;

namespace {

// ---- full-convolution oracle over the algebra of partial permutations on [N] ----
//
// Sigma_nu, as a sum over arrangements, counts each distinct partial permutation
// z_nu times. Expanding Sigma_mu * Sigma_k as the complete double sum over distinct
// elements and reading off the coefficient of one fixed representative of class nu
// therefore gives the structure constant as z_mu z_k (coefficient) / z_nu.
// This route shares no code with the library's fixed-left-factor enumeration.

using PartialPerm = std::pair<std::vector<int>, unsigned>;  // (full permutation of [N], support mask)

Partition type_on_support(const std::vector<int>& p, unsigned mask) {
    const int n = static_cast<int>(p.size());
    std::vector<int> lens;
    std::vector<char> seen(p.size(), 0);
    for (int i = 0; i < n; ++i) {
        if (!(mask & (1u << i)) || seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, x = i;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            x = p[static_cast<std::size_t>(x)];
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

std::vector<PartialPerm> all_of_class(const Partition& cls, int ground) {
    std::vector<PartialPerm> out;
    const int sz = static_cast<int>(cls.size());
    for (unsigned mask = 0; mask < (1u << ground); ++mask) {
        if (std::popcount(mask) != sz) continue;
        std::vector<int> support;
        for (int i = 0; i < ground; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        std::vector<int> image_idx(static_cast<std::size_t>(sz));
        for (int i = 0; i < sz; ++i) image_idx[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> p(static_cast<std::size_t>(ground));
            for (int i = 0; i < ground; ++i) p[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < sz; ++i) {
                p[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] =
                    support[static_cast<std::size_t>(image_idx[static_cast<std::size_t>(i)])];
            }
            if (type_on_support(p, mask) == cls) out.emplace_back(std::move(p), mask);
        } while (std::next_permutation(image_idx.begin(), image_idx.end()));
    }
    return out;
}

SigmaElement brute_product(const Partition& mu, int k) {
    const int ground = static_cast<int>(mu.size()) + k;
    const auto lefts = all_of_class(mu, ground);
    const auto rights = all_of_class(Partition({k}), ground);
    std::map<PartialPerm, long long> tally;
    for (const auto& [sp, smask] : lefts) {
        for (const auto& [cp, cmask] : rights) {
            std::vector<int> prod(sp.size());
            for (std::size_t x = 0; x < sp.size(); ++x) {
                prod[x] = sp[static_cast<std::size_t>(cp[x])];  // cycle first, then sigma
            }
            ++tally[{std::move(prod), smask | cmask}];
        }
    }
    const Int zmu = mu.centralizer_order();
    const Int zk = Partition({k}).centralizer_order();
    SigmaElement out;
    for (int sz = 0; sz <= ground; ++sz) {
        for (const auto& nu : partitions_of(sz)) {
            // canonical representative on the first |nu| points
            std::vector<int> rep(static_cast<std::size_t>(ground));
            for (int i = 0; i < ground; ++i) rep[static_cast<std::size_t>(i)] = i;
            const Perm canon = canonical_permutation(nu);
            for (int i = 0; i < sz; ++i) rep[static_cast<std::size_t>(i)] = canon[static_cast<std::size_t>(i)];
            const unsigned mask = (sz == 0) ? 0u : ((1u << sz) - 1u);
            auto it = tally.find({rep, mask});
            if (it == tally.end()) continue;
            Rat c(to_int(it->second) * zmu * zk);
            c /= Rat(nu.centralizer_order());
            out.add_term(nu, c);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("degree and weight of basis elements") {
    REQUIRE(kerov_degree(Partition({4})) == 4);
    REQUIRE(kerov_degree(Partition({4, 1, 1})) == 8);
    REQUIRE(kerov_degree(Partition::from_unsorted({1, 1, 1, 1, 1, 1, 1, 1})) == 16);
    REQUIRE(weight(Partition({4, 1, 1})) == 9);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) REQUIRE(weight(mu) >= kerov_degree(mu));
    }
}

TEST_CASE("products against the full-convolution oracle") {
    const std::vector<std::pair<Partition, int>> cases = {
        {Partition({1}), 1},    {Partition({1}), 2},    {Partition({2}), 2},
        {Partition({2}), 3},    {Partition({3}), 2},    {Partition({1, 1}), 2},
        {Partition({2, 1}), 2}, {Partition({2, 2}), 2}, {Partition({3}), 3},
    };
    for (const auto& [mu, k] : cases) {
        const SigmaElement got = sigma_product(SigmaElement::basis(mu), k);
        const SigmaElement expected = brute_product(mu, k);
        INFO("mu = " << mu.to_string() << ", k = " << k);
        REQUIRE(got == expected);
    }
}

TEST_CASE("hand-checked products") {
    const SigmaElement s1s1 = sigma_product(SigmaElement::cyclic(1), 1);
    SigmaElement expected;
    expected.add_term(Partition({1, 1}), 1);
    expected.add_term(Partition({1}), 1);
    REQUIRE(s1s1 == expected);

    const SigmaElement s2s2 = sigma_product(SigmaElement::cyclic(2), 2);
    REQUIRE(s2s2.coefficient(Partition({2, 2})) == 1);
    REQUIRE(s2s2.coefficient(Partition({3})) == 4);
    REQUIRE(s2s2.coefficient(Partition({1, 1})) == 2);
    REQUIRE(s2s2.terms().size() == 3);

    // Sigma_1 Sigma_k = Sigma_{k,1} + k Sigma_k
    for (int k = 2; k <= 5; ++k) {
        const SigmaElement e = sigma_product(SigmaElement::cyclic(k), 1);
        REQUIRE(e.coefficient(Partition({k, 1})) == 1);
        REQUIRE(e.coefficient(Partition({k})) == k);
        REQUIRE(e.terms().size() == 2);
    }

    REQUIRE_THROWS_AS(sigma_product(SigmaElement::basis(Partition({15})), 4), std::invalid_argument);
}

TEST_CASE("disjoint-parts law and the Kerov filtration") {
    const SigmaElement prod = sigma_product(SigmaElement::cyclic(2), 3);
    const SigmaElement top = top_kerov_part(prod, 5);
    REQUIRE(top.terms().size() == 1);
    REQUIRE(top.coefficient(Partition({3, 2})) == 1);
    REQUIRE(prod.max_kerov_degree() == 5);

    for (int k = 2; k <= 5; ++k) {
        for (int j = 1; j <= 3 && j + k <= 9; ++j) {
            const SigmaElement p = sigma_product(SigmaElement::cyclic(k), j);
            REQUIRE(p.max_kerov_degree() <= kerov_degree(Partition({k})) + kerov_degree(Partition({j})));
        }
    }
}

TEST_CASE("top Kerov component of powers matches the closed formula") {
    REQUIRE(power_top_formula(3, 1) == SigmaElement::cyclic(3));

    const SigmaElement p22 = power_top_formula(2, 2);
    REQUIRE(p22.coefficient(Partition({2, 2})) == 1);
    REQUIRE(p22.coefficient(Partition({1, 1})) == 2);
    REQUIRE(p22.terms().size() == 2);

    for (const auto& [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        const SigmaElement power = sigma_power(k, m);
        REQUIRE(top_kerov_part(power, k * m) == power_top_formula(k, m));
    }

    const SigmaElement s4 = sigma_power(4, 4);
    const SigmaElement top = top_kerov_part(s4, 16);
    REQUIRE(top.coefficient(Partition({4, 4, 4, 4})) == 1);
    REQUIRE(top.coefficient(Partition::from_unsorted({1, 1, 1, 1, 4, 4})) == 24);
    REQUIRE(top.coefficient(Partition::from_unsorted({1, 1, 1, 1, 1, 1, 1, 1})) == 48);
    REQUIRE(top.terms().size() == 3);

    // top of Sigma_k at its own degree is itself
    const SigmaElement sk = SigmaElement::cyclic(5);
    REQUIRE(top_kerov_part(sk, 5) == sk);
}

TEST_CASE("serialization format") {
    SigmaElement e;
    e.add_term(Partition({4, 4}), 1);
    e.add_term(Partition::from_unsorted({1, 1, 1, 1}), Rat(24));
    const auto m = e.serialized();
    REQUIRE(m.at("4,4") == "1");
    REQUIRE(m.at("1,1,1,1") == "24");
}

TEST_CASE("set partitions and Moebius values") {
    REQUIRE(set_partitions(1).size() == 1);
    REQUIRE(set_partitions(1)[0].mobius() == 1);
    REQUIRE(set_partitions(4).size() == 15);
    REQUIRE(set_partitions(5).size() == 52);

    // Bell triangle oracle
    std::vector<long long> bell = {1};
    std::vector<long long> row = {1};
    for (int r = 1; r <= 8; ++r) {
        std::vector<long long> next = {row.back()};
        for (long long v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bell.push_back(row.front());
    }
    for (int r = 1; r <= 8; ++r) {
        REQUIRE(static_cast<long long>(set_partitions(r).size()) == bell[static_cast<std::size_t>(r)]);
    }

    for (const auto& pi : set_partitions(4)) {
        std::vector<char> seen(5, 0);
        for (const auto& block : pi.blocks) {
            REQUIRE(!block.empty());
            for (int e : block) {
                REQUIRE(!seen[static_cast<std::size_t>(e)]);
                seen[static_cast<std::size_t>(e)] = 1;
            }
        }
        for (int e = 1; e <= 4; ++e) REQUIRE(seen[static_cast<std::size_t>(e)]);
    }
}

TEST_CASE("Moebius inversion lemma") {
    // s = 2 with multiplicities (1,1): F(1,1) F(2,1) - F(1,1) F(2,1) = 0
    auto f_lin = [](int i, int r) { return make_rat(static_cast<long>(2 + 3 * i + 5 * r), 7); };
    REQUIRE(mobius_identity_check(f_lin, {1, 1}) == 0);

    // the worked r = 4 instance with multiplicities (2,2)
    REQUIRE(mobius_identity_check(f_lin, {2, 2}) == 0);

    // randomized exact-rational tables
    Rng rng(987654321);
    for (int trial = 0; trial < 20; ++trial) {
        const int s = 2 + static_cast<int>(rng.below(3));
        std::vector<int> mult(static_cast<std::size_t>(s), 1);
        int total = s;
        while (total < 8 && rng.unit() < 0.7) {
            ++mult[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(s)))];
            ++total;
        }
        std::map<std::pair<int, int>, Rat> table;
        auto f = [&](int i, int r) {
            const auto key = std::make_pair(i, r);
            if (!table.count(key)) {
                table[key] = make_rat(static_cast<long>(rng.below(2000)) - 1000, 1 + static_cast<long>(rng.below(60)));
            }
            return table[key];
        };
        REQUIRE(mobius_identity_check(f, mult) == 0);
    }

    // with a single value (s = 1) the lemma hypothesis fails and the sum need not vanish
    REQUIRE_THROWS_AS(mobius_identity_check(f_lin, {2}), std::invalid_argument);
    // the analogous s = 1 sum computed by hand: F(1,2) - F(1,1)^2 != 0 for this table
    REQUIRE(f_lin(1, 2) - f_lin(1, 1) * f_lin(1, 1) != 0);
}

TEST_CASE("empirical cumulants from raw samples") {
    const std::vector<std::vector<double>> data = {
        {1.0, 2.0, 0.5}, {2.0, 1.0, -0.5}, {3.0, 4.0, 1.5}, {0.0, 1.0, 2.5}, {1.5, 2.5, 0.0}};
    const double t = static_cast<double>(data.size());

    double mean0 = 0.0;
    for (const auto& row : data) mean0 += row[0];
    mean0 /= t;
    REQUIRE(empirical_cumulant(data, {0}) == Catch::Approx(mean0).epsilon(1e-12));

    double mean1 = 0.0, m01 = 0.0;
    for (const auto& row : data) {
        mean1 += row[1];
        m01 += row[0] * row[1];
    }
    mean1 /= t;
    m01 /= t;
    REQUIRE(empirical_cumulant(data, {0, 1}) == Catch::Approx(m01 - mean0 * mean1).epsilon(1e-12));

    // third joint cumulant of independent standard gaussians is near zero
    Rng rng(777);
    std::vector<std::vector<double>> gauss;
    gauss.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        std::vector<double> row(3);
        for (auto& v : row) {
            const double u1 = rng.unit(), u2 = rng.unit();
            v = std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
        }
        gauss.push_back(std::move(row));
    }
    REQUIRE(std::abs(empirical_cumulant(gauss, {0, 1, 2})) < 0.05);

    REQUIRE_THROWS_AS(empirical_cumulant(data, {0, 1, 2, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(empirical_cumulant({{1.0}}, {0}), std::invalid_argument);
}
