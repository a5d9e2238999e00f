#include <doctest.h>

#include <cmath>

#include "eip/errors.hpp"
#include "eip/martin.hpp"

using namespace eip;

namespace {

IntervalSystem sys(int n, std::vector<Edge> edges) { return IntervalSystem(n, std::move(edges)); }

} // namespace

TEST_CASE("binomial and catalan") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(50, 25) == BigInt("126410606437752"));
    const std::vector<int> catalans{1, 1, 2, 5, 14, 42, 132};
    for (size_t i = 0; i < catalans.size(); ++i) CHECK(catalan(static_cast<int>(i)) == catalans[i]);
}

TEST_CASE("gamma exact values") {
    CHECK(gamma(sys(2, {{1, 2}}), sys(3, {{1, 2}})) == Rational(1, 3));
    CHECK(gamma(sys(1, {}), sys(5, {{2, 4}})) == 1);
    CHECK(gamma(sys(4, {{1, 4}}), sys(3, {{1, 3}})) == 0); // k > n
    CHECK(gamma(spine_tree(3), spine_tree(3)) == 1);
}

TEST_CASE("gamma normalization over all targets") {
    for (const IntervalSystem& source : all_interval_systems(5)) {
        const auto dist = gamma_distribution(source, 3);
        std::int64_t total = 0;
        for (const auto& [target, count] : dist) {
            CHECK(target.n() == 3);
            total += count;
        }
        CHECK(total == 10); // C(5,3)
    }
}

TEST_CASE("gamma heredity of structure predicates") {
    for (int n = 2; n <= 5; ++n) {
        for (const IntervalSystem& source : all_interval_systems(n)) {
            const bool schroeder = is_schroeder(source), binary = is_binary(source),
                       partition = is_interval_partition(source);
            if (!schroeder && !partition) continue;
            for (int k = 1; k < n; ++k) {
                for (const auto& [target, count] : gamma_distribution(source, k)) {
                    if (count == 0) continue;
                    if (schroeder) CHECK(is_schroeder(target));
                    if (binary) CHECK(is_binary(target));
                    if (partition) CHECK(is_interval_partition(target));
                }
            }
        }
    }
}

TEST_CASE("gamma enumeration cap") {
    CHECK_THROWS_AS(gamma(sys(10, {{1, 10}}), sys(100, {{1, 100}})), UnsupportedSizeError);
}

TEST_CASE("canonical tree families") {
    CHECK(spine_tree(4) == sys(4, {{1, 4}, {2, 4}, {2, 3}}));
    CHECK(spine_tree(1) == sys(1, {}));
    CHECK(complete_tree(0) == sys(1, {}));
    CHECK(complete_tree(2) == sys(4, {{1, 4}, {1, 2}, {3, 4}}));
    for (int n : {1, 2, 5, 9}) CHECK(is_binary(spine_tree(n)));
    for (int d : {0, 1, 2, 4}) CHECK(is_binary(complete_tree(d)));
}

TEST_CASE("gamma vanishes on non-Schroeder targets of tree sources") {
    const IntervalSystem source = spine_tree(10);
    for (const IntervalSystem& target : all_interval_systems(3))
        if (!is_schroeder(target)) CHECK(gamma(target, source) == 0);
}

TEST_CASE("gamma_convergence") {
    const GammaTable trivial_table =
        gamma_convergence(TreeFamily::complete, sys(2, {{1, 2}}), {1});
    REQUIRE(trivial_table.entries.size() == 1);
    CHECK(trivial_table.entries[0].first == 2);
    CHECK(trivial_table.entries[0].second == 1);

    const IntervalSystem left = sys(3, {{1, 3}, {1, 2}});
    const GammaTable table = gamma_convergence(TreeFamily::spine, left, {10, 20, 40});
    double prev_gap = 1.0;
    SeededRng rng(61);
    const double mc = boundary_law_estimate(spine_limit(256), left, 200000, rng).estimate;
    for (const auto& [n, g] : table.entries) {
        const double gap = std::abs(static_cast<double>(g) - mc);
        CHECK(gap <= prev_gap + 0.02);
        prev_gap = gap;
    }
    CHECK(prev_gap <= 0.02);
}

TEST_CASE("boundary_law_estimate degenerate limits") {
    SeededRng rng(77);
    CHECK(boundary_law_estimate(LimitSet(), sys(3, {}), 2000, rng).estimate == 1.0);
    CHECK(boundary_law_estimate(LimitSet({{0.0, 1.0}}), sys(3, {{1, 3}}), 2000, rng).estimate ==
          1.0);
}

TEST_CASE("uniformity_test") {
    CHECK(uniformity_test({50, 50}).statistic == doctest::Approx(0.0));
    CHECK(uniformity_test({60, 40}).statistic == doctest::Approx(4.0));
    CHECK(uniformity_test({7, 7, 7, 7}).statistic == doctest::Approx(0.0));
    CHECK_THROWS_AS(uniformity_test({5}), std::domain_error);
}

TEST_CASE("chi_square_critical approximation") {
    // chi-square upper 1% points: df=13 -> 27.688, df=10 -> 23.209
    CHECK(std::abs(chi_square_critical(13, 2.3263478740408408) - 27.688) < 0.5);
    CHECK(std::abs(chi_square_critical(10, 2.3263478740408408) - 23.209) < 0.5);
}
