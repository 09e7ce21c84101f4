#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <gelfand/diagram.hpp>
#include <gelfand/partition.hpp>

using namespace gelfand;

TEST_CASE("interlacing coordinates of named shapes") {
    const auto empty = interlacing_of(Partition());
    REQUIRE(empty.minima == std::vector<long long>{0});
    REQUIRE(empty.maxima.empty());

    const auto small = interlacing_of(Partition({2, 1}));
    REQUIRE(small.minima == std::vector<long long>{-2, 0, 2});
    REQUIRE(small.maxima == std::vector<long long>{-1, 1});

    const auto fig = interlacing_of(Partition({7, 6, 4, 4, 3, 1}));
    REQUIRE(fig.minima.size() == 6);
    REQUIRE(fig.maxima.size() == 5);
    REQUIRE(moment_p(Partition({7, 6, 4, 4, 3, 1}), 2) == 50);
}

TEST_CASE("interlacing invariants, exhaustively up to size 30") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto ic = interlacing_of(lambda);
            REQUIRE(ic.minima.size() == ic.maxima.size() + 1);
            long long sum = 0;
            for (std::size_t i = 0; i < ic.maxima.size(); ++i) {
                REQUIRE(ic.minima[i] < ic.maxima[i]);
                REQUIRE(ic.maxima[i] < ic.minima[i + 1]);
                sum += ic.minima[i] - ic.maxima[i];
            }
            sum += ic.minima.back();
            REQUIRE(sum == 0);  // p_1 = 0
            REQUIRE(moment_p(lambda, 2) == 2 * n);
        }
    }
}

TEST_CASE("interlacing moments of (2,1)") {
    const Partition p({2, 1});
    REQUIRE(moment_p(p, 1) == 0);
    REQUIRE(moment_p(p, 2) == 6);
    REQUIRE(moment_p(p, 3) == 0);
    REQUIRE(moment_p(p, 4) == 30);
    REQUIRE_THROWS_AS(moment_p(p, 0), std::invalid_argument);
}

TEST_CASE("LSKV curve values and moments") {
    REQUIRE(lskv_profile(2.0) == 2.0);
    REQUIRE(lskv_profile(-3.0) == 3.0);
    REQUIRE(lskv_profile(0.0) == Catch::Approx(4.0 / std::numbers::pi).epsilon(1e-12));
    REQUIRE(lskv_moment(4) == 6);
    REQUIRE(lskv_moment(2) == 2);
    REQUIRE(lskv_moment(3) == 0);
    REQUIRE(lskv_moment(7) == 0);
    REQUIRE(lskv_moment(8) == 70);
    const ContinuousDiagram omega = ContinuousDiagram::lskv();
    REQUIRE(omega.area() == 2.0);
    REQUIRE(omega.support() == std::pair<double, double>{-2.0, 2.0});
}

TEST_CASE("rescaled profiles: areas, moments, homogeneity") {
    const Partition p({2, 1});

    const ContinuousDiagram one_box = rescale(Partition({1}), 1.0);
    REQUIRE(one_box(0.0) == Catch::Approx(2.0));
    REQUIRE(moment_p(one_box, 2) == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(one_box.area() == Catch::Approx(2.0).margin(1e-12));

    for (const auto& lambda : {Partition({5, 3, 1, 1}), Partition({4, 4, 2}), Partition({10})}) {
        const auto star = rescale(lambda, static_cast<double>(lambda.size()));
        REQUIRE(star.area() == Catch::Approx(2.0).margin(1e-10));
        REQUIRE(moment_p(star, 2) == Catch::Approx(2.0).margin(1e-10));
    }

    // homogeneity p_k(omega^t) = t^{-k/2} p_k(omega)
    for (double t : {2.0, 4.0, 9.0}) {
        for (int k = 1; k <= 8; ++k) {
            const double lhs = moment_p(rescale(p, t), k);
            const double rhs = moment_p(p, k).get_d() / std::pow(t, 0.5 * k);
            REQUIRE(lhs == Catch::Approx(rhs).margin(1e-9));
        }
    }

    // exact homogeneity at t = 4: breakpoints are half-integers, exactly representable
    {
        const auto ic = interlacing_of(p);
        for (int k = 1; k <= 8; ++k) {
            Rat scaled = 0;
            for (long long x : ic.minima) scaled += pow_rat(make_rat(static_cast<long>(x), 2), static_cast<unsigned long>(k));
            for (long long y : ic.maxima) scaled -= pow_rat(make_rat(static_cast<long>(y), 2), static_cast<unsigned long>(k));
            REQUIRE(scaled * pow_rat(Rat(2), static_cast<unsigned long>(k)) == Rat(moment_p(p, k)));
        }
    }

    REQUIRE(moment_p(rescale(p, 4.0), 4) == Catch::Approx(moment_p(p, 4).get_d() / 16.0).margin(1e-12));
    REQUIRE_THROWS_AS(rescale(p, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(rescale(p, -1.0), std::invalid_argument);
}

TEST_CASE("sup distance") {
    const ContinuousDiagram omega = ContinuousDiagram::lskv();
    REQUIRE(sup_distance(omega, omega).value == 0.0);

    // single box vs Omega: the profile peaks at lambda*(0) = 2, so the sup is 2 - 4/pi
    const auto d = sup_distance(rescale(Partition({1}), 1.0), omega);
    REQUIRE(d.value == Catch::Approx(2.0 - 4.0 / std::numbers::pi).margin(2e-3));
    REQUIRE(d.grid_error_bound == Catch::Approx(2e-3));

    // the max really is attained at s = 0
    double best = 0.0, arg = -10.0;
    const auto box = rescale(Partition({1}), 1.0);
    for (double s = -2.5; s <= 2.5; s += 1e-3) {
        const double v = std::abs(box(s) - omega(s));
        if (v > best) {
            best = v;
            arg = s;
        }
    }
    REQUIRE(std::abs(arg) < 1e-6);
}
