#include "eip/identities.hpp"

#include <algorithm>
#include <numeric>

#include "eip/hypergraph.hpp"
#include "eip/interval_system.hpp"
#include "eip/limit.hpp"

namespace eip {

namespace {

template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    std::vector<int> j(k);
    for (int i = 0; i < k; ++i) j[i] = i + 1;
    for (;;) {
        visit(j);
        int i = k - 1;
        while (i >= 0 && j[i] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++j[i];
        for (int t = i + 1; t < k; ++t) j[t] = j[t - 1] + 1;
    }
}

// pi restricted to [k]: erase the letters k+1..n from the one-line notation.
Permutation pattern_on_prefix(const Permutation& pi, int k) {
    std::vector<int> line;
    line.reserve(k);
    for (int v : pi.one_line())
        if (v <= k) line.push_back(v);
    return Permutation(std::move(line));
}

// Reads a hypergraph whose edges happen to be intervals back as a system.
// Non-contiguous edges mark the identity under test as failed.
bool as_system(const IntervalHypergraph& h, IntervalSystem& out) {
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
        const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
        if (*hi - *lo + 1 != static_cast<int>(e.size())) return false;
        edges.emplace_back(*lo, *hi);
    }
    out = IntervalSystem(h.n(), std::move(edges));
    return true;
}

IdentityReport scaling_suite(int max_n) {
    IdentityReport rep{"scaling", 0, 0};
    for (int n = 1; n <= max_n; ++n) {
        for (const IntervalSystem& sys : all_interval_systems(n)) {
            const LimitSet k_set = scale(sys);
            for (int k = 1; k <= n; ++k) {
                for_each_combination(n, k, [&](const std::vector<int>& j) {
                    const SampleVector vec(n, j);
                    ++rep.cases;
                    if (subsample(sys, vec) != sample_system(k_set, scale_vector(vec)))
                        ++rep.failures;
                });
            }
        }
    }
    return rep;
}

IdentityReport composition_suite() {
    IdentityReport rep{"composition", 0, 0};
    constexpr int n = 5, m = 3, k = 2;
    const auto systems = all_interval_systems(n);
    for_each_combination(n, m, [&](const std::vector<int>& l) {
        const SampleVector lv(n, l);
        for_each_combination(m, k, [&](const std::vector<int>& h) {
            std::vector<int> composed(k);
            for (int i = 0; i < k; ++i) composed[i] = l[h[i] - 1];
            const SampleVector hv(m, h), cv(n, composed);
            for (const IntervalSystem& sys : systems) {
                ++rep.cases;
                if (subsample(subsample(sys, lv), hv) != subsample(sys, cv)) ++rep.failures;
            }
        });
    });
    return rep;
}

IdentityReport three_route_suite() {
    IdentityReport rep{"three-route", 0, 0};
    constexpr int n = 4;
    const auto systems = all_interval_systems(n);
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    do {
        const Permutation pi(line);
        for (int k = 1; k <= n; ++k) {
            const Permutation pk_inv = pattern_on_prefix(pi, k).inverse();
            for (const IntervalSystem& sys : systems) {
                ++rep.cases;
                const IntervalSystem a = sequential_delete(sys, pi, k);
                const IntervalSystem b = subsample(sys, selection_vector(pi, k));
                const IntervalHypergraph h = relabel_hypergraph(
                    restrict_hypergraph(relabel_hypergraph(IntervalHypergraph::from_system(sys), pi), k),
                    pk_inv);
                IntervalSystem c(k);
                if (!as_system(h, c) || a != b || a != c) ++rep.failures;
            }
        }
    } while (std::next_permutation(line.begin(), line.end()));
    return rep;
}

IdentityReport deletion_vector_suite(int max_n) {
    IdentityReport rep{"deletion-vector", 0, 0};
    for (int n = 2; n <= max_n; ++n) {
        for (const IntervalSystem& sys : all_interval_systems(n)) {
            for (int k = 1; k <= n; ++k) {
                std::vector<int> j;
                j.reserve(n - 1);
                for (int i = 1; i <= n; ++i)
                    if (i != k) j.push_back(i);
                ++rep.cases;
                if (delete_point(sys, k) != subsample(sys, SampleVector(n, j))) ++rep.failures;
            }
        }
    }
    return rep;
}

} // namespace

std::vector<IdentityReport> run_identity_suites(int max_n) {
    max_n = std::clamp(max_n, 1, 6);
    return {scaling_suite(max_n), composition_suite(), three_route_suite(),
            deletion_vector_suite(std::min(max_n, 4))};
}

bool all_passed(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

} // namespace eip
