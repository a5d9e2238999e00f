#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "eip/processes.hpp"

using namespace eip;

namespace {

IntervalSystem sys(int n, std::vector<Edge> edges) { return IntervalSystem(n, std::move(edges)); }

template <typename F>
void for_each_eraser_sequence(int n_max, F&& visit) {
    std::vector<int> eta(n_max - 1, 1);
    for (;;) {
        visit(EraserSequence(eta));
        int i = n_max - 2;
        while (i >= 0 && eta[i] == i + 2) --i;
        if (i < 0) return;
        ++eta[i];
        for (int t = i + 1; t < n_max - 1; ++t) eta[t] = 1;
    }
}

} // namespace

TEST_CASE("eta_from_u") {
    CHECK(eta_from_u(USequence({0.3, 0.7, 0.1})).values() == std::vector<int>{2, 1});
    CHECK(eta_from_u(USequence({0.1, 0.2, 0.3, 0.4})).values() == std::vector<int>{2, 3, 4});
    CHECK(eta_from_u(USequence({0.4, 0.3, 0.2, 0.1})).values() == std::vector<int>{1, 1, 1});
}

TEST_CASE("perm_from_u") {
    const PermutationSequence s = perm_from_u(USequence({0.3, 0.7, 0.1}));
    CHECK(s.at(3) == Permutation({3, 1, 2}));
    CHECK(s.at(2) == Permutation({1, 2}));
    CHECK(perm_from_u(USequence({0.1, 0.5, 0.9})).at(3) == Permutation::identity(3));
}

TEST_CASE("perm_from_eta and eta_from_perm") {
    const PermutationSequence s = perm_from_eta(EraserSequence({2, 1}), 3);
    CHECK(s.at(3) == Permutation({3, 1, 2}));
    CHECK(perm_from_eta(EraserSequence({2, 3, 4}), 4).at(4) == Permutation::identity(4));
    CHECK(eta_from_perm(s).values() == std::vector<int>{2, 1});
    const PermutationSequence ident = perm_from_u(USequence({0.1, 0.2, 0.3, 0.4}));
    CHECK(eta_from_perm(ident).values() == std::vector<int>{2, 3, 4});
}

TEST_CASE("eta <-> perm round trip, exhaustive up to N=6") {
    for (int n_max = 2; n_max <= 6; ++n_max) {
        for_each_eraser_sequence(n_max, [&](const EraserSequence& eta) {
            CHECK(eta_from_perm(perm_from_eta(eta, n_max)) == eta);
        });
    }
}

TEST_CASE("triple consistency of U, S and eta") {
    SeededRng rng(12);
    for (int t = 0; t < 1000; ++t) {
        const USequence u = USequence::draw(8, rng);
        const PermutationSequence s = perm_from_u(u);
        const EraserSequence eta = eta_from_u(u);
        CHECK(eta_from_perm(s) == eta);
        const PermutationSequence rebuilt = perm_from_eta(eta, 8);
        for (int n = 1; n <= 8; ++n) CHECK(rebuilt.at(n) == s.at(n));
    }
}

TEST_CASE("simulate_eip degenerate limits") {
    SeededRng rng(4);
    const auto [trivial, u0] = simulate_eip(LimitSet(), 6, rng);
    for (int n = 1; n <= 6; ++n) CHECK(trivial.at(n).trivial());

    const auto [full, u1] = simulate_eip(LimitSet({{0.0, 1.0}}), 4, rng);
    for (int n = 2; n <= 4; ++n) CHECK(full.at(n) == sys(n, {{1, n}}));
}

TEST_CASE("simulate_eip trajectory invariants") {
    SeededRng rng(1);
    const auto [traj, u] = simulate_eip(spine_limit(64), 2000, rng);
    CHECK(traj.size() == 2000);
    CHECK(traj.consistent());
    CHECK(eta_from_u(u) == traj.erasers);
    const PermutationSequence s = perm_from_u(u);
    for (int k : {1, 3, 7, 20})
        for (int n : {50, 200, 2000})
            CHECK(traj.at(k) == subsample(traj.at(n), selection_vector(s.at(n), k)));
}

TEST_CASE("backward_chain") {
    SeededRng rng(8);
    const auto all_trivial = backward_chain(sys(5, {}), rng);
    for (int n = 1; n <= 5; ++n) CHECK(all_trivial.at(n).trivial());
    CHECK(all_trivial.consistent());

    int kept = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const auto traj = backward_chain(sys(3, {{1, 2}}), rng);
        CHECK(traj.consistent());
        kept += traj.at(2) == sys(2, {{1, 2}});
    }
    CHECK(std::abs(kept / double(trials) - 1.0 / 3) < 0.03);
}

TEST_CASE("remy_step") {
    SeededRng rng(15);
    CHECK(remy_step(sys(1, {}), rng) == sys(2, {{1, 2}}));
    CHECK_THROWS_AS(remy_step(sys(3, {{1, 2}}), rng), std::domain_error);

    int left = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t)
        left += remy_step(sys(2, {{1, 2}}), rng) == sys(3, {{1, 3}, {1, 2}});
    CHECK(std::abs(left / double(trials) - 0.5) < 0.02);
}

TEST_CASE("remy_chain grows binary trees; deletion preserves binarity") {
    SeededRng rng(22);
    IntervalSystem tree = remy_chain(40, rng);
    CHECK(tree.n() == 40);
    CHECK(is_binary(tree));
    while (tree.n() > 1) {
        tree = delete_point(tree, rng.uniform_1_to(tree.n()));
        CHECK(is_binary(tree));
    }
}

TEST_CASE("exchangeable_hypergraph") {
    CHECK(exchangeable_hypergraph(sys(3, {{1, 2}}), Permutation({3, 1, 2})) ==
          IntervalHypergraph(3, {{1, 3}}));
    const IntervalSystem i = sys(4, {{2, 4}});
    CHECK(exchangeable_hypergraph(i, Permutation::identity(4)) ==
          IntervalHypergraph::from_system(i));
}

TEST_CASE("231-avoiding sampler") {
    SeededRng rng(33);
    CHECK(sample_231_avoiding(1, rng) == Permutation({1}));
    CHECK_FALSE(avoids_231(Permutation({2, 3, 1})));
    CHECK(avoids_231(Permutation({3, 1, 2})));

    std::map<std::vector<int>, int> seen;
    for (int t = 0; t < 5000; ++t) {
        const Permutation sigma = sample_231_avoiding(4, rng);
        CHECK(avoids_231(sigma));
        ++seen[sigma.one_line()];
    }
    CHECK(seen.size() == 14); // Catalan(4)

    for (int t = 0; t < 50; ++t) CHECK(avoids_231(sample_231_avoiding(30, rng)));
}

TEST_CASE("permutation_graph") {
    const auto pts = permutation_graph(Permutation::identity(3));
    CHECK(pts == std::vector<Point>{{1.0 / 3, 1.0 / 3}, {2.0 / 3, 2.0 / 3}, {1.0, 1.0}});
}

TEST_CASE("seeded rng reproducibility") {
    SeededRng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    SeededRng s1 = SeededRng::substream(42, 1), s2 = SeededRng::substream(42, 2);
    CHECK(s1.next_u64() != s2.next_u64());
}
