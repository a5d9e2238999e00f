#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eip/limit.hpp"
#include "eip/processes.hpp"

using namespace eip;

namespace {

LimitSet random_limit(int max_points, SeededRng& rng) {
    const int m = static_cast<int>(rng.uniform_below(max_points + 1));
    std::vector<Point> pts;
    for (int i = 0; i < m; ++i) {
        double a = rng.uniform01(), b = rng.uniform01();
        if (a == b) continue;
        pts.emplace_back(std::min(a, b), std::max(a, b));
    }
    return LimitSet(std::move(pts));
}

} // namespace

TEST_CASE("scale") {
    // Implicit singletons scale to ((j-1)/n, j/n) alongside the stored edges.
    CHECK(scale(IntervalSystem(2, {{1, 2}})) == LimitSet({{0.0, 0.5}, {0.0, 1.0}, {0.5, 1.0}}));
    CHECK(scale(IntervalSystem(2)) == LimitSet({{0.0, 0.5}, {0.5, 1.0}}));
    CHECK(scale(IntervalSystem(1)) == LimitSet({{0.0, 1.0}}));
    const LimitSet k = scale(IntervalSystem(4, {{2, 3}}));
    CHECK(k.points().size() == 5);
    CHECK(std::count(k.points().begin(), k.points().end(), Point{0.25, 0.75}) == 1);
}

TEST_CASE("hausdorff") {
    CHECK(hausdorff(LimitSet({{0.2, 0.8}}), LimitSet()) == doctest::Approx(0.6).epsilon(1e-12));
    const LimitSet k({{0.1, 0.4}, {0.3, 0.9}});
    CHECK(hausdorff(k, k) == 0.0);
    CHECK(hausdorff(LimitSet({{0.0, 1.0}}), LimitSet({{0.0, 0.5}})) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hausdorff metric properties on random triples") {
    SeededRng rng(7);
    for (int t = 0; t < 200; ++t) {
        const LimitSet a = random_limit(6, rng), b = random_limit(6, rng),
                       c = random_limit(6, rng);
        const double dab = hausdorff(a, b), dba = hausdorff(b, a), dac = hausdorff(a, c),
                     dcb = hausdorff(c, b);
        CHECK(dab == dba);
        CHECK(dab >= 0.0);
        CHECK(dab <= dac + dcb + 1e-12);
        CHECK(hausdorff(a, a) == 0.0);
    }
}

TEST_CASE("sample_system") {
    CHECK(sample_system(LimitSet({{0.1, 0.9}}), OrderedSample({0.2, 0.5, 0.95})) ==
          IntervalSystem(3, {{1, 2}}));
    CHECK(sample_system(LimitSet(), OrderedSample({0.3, 0.6})).trivial());
    SeededRng rng(3);
    for (int k = 1; k <= 6; ++k)
        CHECK(sample_system(LimitSet({{0.0, 1.0}}), OrderedSample::draw(k, rng)) ==
              (k == 1 ? IntervalSystem(1) : IntervalSystem(k, {{1, k}})));
    CHECK_THROWS_AS(OrderedSample({0.5, 0.5}), std::domain_error);
}

TEST_CASE("scale_vector") {
    CHECK(scale_vector(SampleVector(4, {1, 3})).values() == std::vector<double>{0.125, 0.625});
    CHECK(scale_vector(SampleVector(5, {5})).values() == std::vector<double>{0.9});
    const auto full = scale_vector(SampleVector::full(4));
    CHECK(full.values() == std::vector<double>{0.125, 0.375, 0.625, 0.875});
}

TEST_CASE("cdf_sup_deviation") {
    auto [dp1, dm1] = cdf_sup_deviation(OrderedSample({0.5}));
    CHECK(dp1 == doctest::Approx(0.5));
    CHECK(dm1 == doctest::Approx(0.5));
    auto [dp2, dm2] = cdf_sup_deviation(OrderedSample({0.25, 0.75}));
    CHECK(dp2 == doctest::Approx(0.25));
    CHECK(dm2 == doctest::Approx(0.25));
    auto [dp3, dm3] = cdf_sup_deviation(scale_vector(SampleVector::full(8)));
    CHECK(dp3 == doctest::Approx(1.0 / 16));
    CHECK(dm3 == doctest::Approx(1.0 / 16));
}

TEST_CASE("rectangle intersection") {
    const LimitSet k({{0.1, 0.9}});
    CHECK(intersects_closed(k, {0.1, 0.2, 0.5, 0.9}));
    CHECK_FALSE(intersects_open(k, {0.1, 0.2, 0.5, 0.9}));
    CHECK(intersects_closed(LimitSet(), {0.2, 0.4, 0.3, 0.5}));
    CHECK_FALSE(intersects_closed(LimitSet(), {0.1, 0.2, 0.5, 0.9}));
    CHECK_FALSE(intersects_open(LimitSet(), {0.1, 0.2, 0.5, 0.9}));
}

TEST_CASE("canonical limit families") {
    CHECK(spine_limit(1) == LimitSet({{0.0, 1.0}}));
    CHECK(spine_limit(2) == LimitSet({{0.0, 1.0}, {0.25, 0.75}}));
    CHECK(complete_tree_limit(1) == LimitSet({{0.0, 0.5}, {0.0, 1.0}, {0.5, 1.0}}));
    CHECK(complete_tree_limit(0) == LimitSet({{0.0, 1.0}}));
    CHECK(spine_limit(64).points().size() == 64);
    CHECK(complete_tree_limit(3).points().size() == 1 + 2 + 4 + 8);
}

TEST_CASE("limit predicates") {
    CHECK(is_schroeder_limit(spine_limit(16)));
    CHECK(is_schroeder_limit(complete_tree_limit(4)));
    CHECK_FALSE(is_schroeder_limit(LimitSet()));
    CHECK_FALSE(is_schroeder_limit(LimitSet({{0.0, 1.0}, {0.2, 0.4}, {0.3, 0.6}})));
    CHECK(is_partition_limit(LimitSet({{0.1, 0.2}, {0.4, 0.6}})));
    CHECK_FALSE(is_partition_limit(LimitSet({{0.1, 0.5}, {0.4, 0.6}})));
}

TEST_CASE("is_binary_limit_mc") {
    CHECK(is_binary_limit_mc(complete_tree_limit(4), 10000, 11, 0.9).verdict);
    const auto degenerate = is_binary_limit_mc(LimitSet({{0.0, 1.0}}), 10000, 11, 0.9);
    CHECK(degenerate.estimate == 0.0);
    CHECK_FALSE(degenerate.verdict);
    CHECK(is_binary_limit_mc(spine_limit(64), 10000, 11, 0.9).verdict);
}

TEST_CASE("deterministic Hausdorff bound on random cases") {
    SeededRng rng(101);
    for (int t = 0; t < 500; ++t) {
        const LimitSet k = random_limit(10, rng);
        const OrderedSample u = OrderedSample::draw(1 + static_cast<int>(rng.uniform_below(20)), rng);
        const auto [dp, dm] = cdf_sup_deviation(u);
        CHECK(hausdorff(scale(sample_system(k, u)), k) <= dp + dm + 1e-12);
    }
}

TEST_CASE("nesting identity for sample_system") {
    SeededRng rng(55);
    for (int t = 0; t < 100; ++t) {
        const LimitSet k = random_limit(8, rng);
        const USequence u = USequence::draw(8, rng);
        const PermutationSequence s = perm_from_u(u);
        std::vector<double> all = u.values();
        std::sort(all.begin(), all.end());
        const IntervalSystem i8 = sample_system(k, OrderedSample(all));
        for (int m = 1; m <= 8; ++m) {
            std::vector<double> first(u.values().begin(), u.values().begin() + m);
            std::sort(first.begin(), first.end());
            CHECK(sample_system(k, OrderedSample(std::move(first))) ==
                  subsample(i8, selection_vector(s.at(8), m)));
        }
    }
}
