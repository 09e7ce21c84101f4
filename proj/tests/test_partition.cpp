#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include <gelfand/involutions.hpp>
#include <gelfand/partition.hpp>

using namespace gelfand;

namespace {

/// Independent dimension oracle: count growth paths of the diagram by repeatedly
/// removing corners (no hook lengths involved).
Int syt_count_by_corner_removal(const Partition& lambda, std::map<Partition, Int>& memo) {
    if (lambda.empty()) return Int(1);
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    Int total = 0;
    const auto& parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
        const bool removable = (i + 1 == lambda.length()) || parts[i] > parts[i + 1];
        if (!removable) continue;
        std::vector<int> next = parts;
        if (--next[static_cast<std::size_t>(i)] == 0) next.erase(next.begin() + i);
        total += syt_count_by_corner_removal(Partition(next), memo);
    }
    memo.emplace(lambda, total);
    return memo.at(lambda);
}

}  // namespace

TEST_CASE("partition validation and accessors") {
    REQUIRE_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(Partition({-1}), std::invalid_argument);

    const Partition p = Partition::from_unsorted({1, 4, 4, 3, 6, 7});
    REQUIRE(p.parts() == std::vector<int>{7, 6, 4, 4, 3, 1});
    REQUIRE(p.size() == 25);
    REQUIRE(p.length() == 6);
    REQUIRE(p.multiplicity(4) == 2);
    REQUIRE(p.multiplicity(5) == 0);
    REQUIRE(p.to_string() == "[7,6,4,4,3,1]");
    REQUIRE(p.key() == "7,6,4,4,3,1");
    REQUIRE(parse_partition("[7,6,4,4,3,1]") == p);
    REQUIRE(parse_partition("1,4,4,3,6,7") == p);
    REQUIRE(parse_partition("").empty());
    REQUIRE(parse_partition("[]").empty());

    const Partition empty;
    REQUIRE(empty.size() == 0);
    REQUIRE(empty.to_string() == "[]");
}

TEST_CASE("conjugate and beta set") {
    const Partition p({4, 2, 1});
    REQUIRE(p.conjugate() == Partition({3, 2, 1, 1}));
    for (const auto& lambda : partitions_of(8)) {
        REQUIRE(lambda.conjugate().conjugate() == lambda);
        const auto b = lambda.beta_set();
        for (std::size_t i = 1; i < b.size(); ++i) REQUIRE(b[i] < b[i - 1]);
    }
    REQUIRE(Partition({2, 1}).beta_set() == std::vector<long long>{3, 1});
}

TEST_CASE("partition enumeration counts") {
    const std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(static_cast<int>(partitions_of(n).size()) == counts[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("hook lengths of a small shape") {
    REQUIRE(Partition({2, 1}).hook_lengths() == std::vector<int>{3, 1, 1});
    REQUIRE(Partition({3, 2}).hook_lengths() == std::vector<int>{4, 3, 1, 2, 1});
}

TEST_CASE("dimension matches the corner-removal oracle") {
    std::map<Partition, Int> memo;
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            REQUIRE(dim_exact(lambda) == syt_count_by_corner_removal(lambda, memo));
        }
    }
    REQUIRE(dim_exact(Partition({2, 1})) == 2);
    REQUIRE(dim_exact(Partition({9})) == 1);
    REQUIRE(dim_exact(Partition({1, 1, 1, 1})) == 1);
}

TEST_CASE("dimension sums against involutions and the group order") {
    Int sum_dim = 0;
    for (const auto& lambda : partitions_of(6)) sum_dim += dim_exact(lambda);
    REQUIRE(sum_dim == 76);
    REQUIRE(sum_dim == involution_count(6));

    Int sum_sq = 0;
    for (const auto& lambda : partitions_of(9)) sum_sq += dim_exact(lambda) * dim_exact(lambda);
    REQUIRE(sum_sq == factorial(9));
}

TEST_CASE("log_dim tracks the exact dimension") {
    for (const auto& lambda : partitions_of(12)) {
        REQUIRE(std::abs(log_dim(lambda) - log_int(dim_exact(lambda))) < 1e-9);
    }
    // a larger staircase-like shape
    std::vector<int> parts;
    for (int p = 24; p >= 1; --p) parts.push_back(p);
    const Partition big(parts);  // size 300
    REQUIRE(big.size() == 300);
    REQUIRE(std::abs(log_dim(big) - log_int(dim_exact(big))) < 1e-9);
}

TEST_CASE("class sizes from centralizer orders partition the group") {
    for (int n = 1; n <= 8; ++n) {
        Int covered = 0;
        const Int nf = factorial(static_cast<unsigned long>(n));
        for (const auto& t : partitions_of(n)) {
            REQUIRE(nf % t.centralizer_order() == 0);
            covered += nf / t.centralizer_order();
        }
        REQUIRE(covered == nf);
    }
}
