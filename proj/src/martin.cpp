#include "eip/martin.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "eip/errors.hpp"

namespace eip {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

const BigInt& catalan(int n) {
    static std::vector<BigInt> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        // C_m = C_{m-1} * 2(2m-1)/(m+1)
        BigInt next = cache.back() * (2 * (2 * m - 1));
        next /= m + 1;
        cache.push_back(std::move(next));
    }
    return cache[n];
}

namespace {

// Visits every strictly increasing vector in [k:n].
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

void check_cap(int n, int k) {
    if (binomial(n, k) > kGammaEnumerationCap)
        throw UnsupportedSizeError("gamma: C(n,k) exceeds the enumeration cap");
}

} // namespace

Rational gamma(const IntervalSystem& target, const IntervalSystem& source) {
    const int k = target.n();
    const int n = source.n();
    if (k > n) return 0;
    check_cap(n, k);
    std::int64_t hits = 0;
    for_each_combination(n, k, [&](const std::vector<int>& j) {
        if (subsample(source, SampleVector(n, j)) == target) ++hits;
    });
    return Rational(BigInt(hits), binomial(n, k));
}

std::map<IntervalSystem, std::int64_t> gamma_distribution(const IntervalSystem& source, int k) {
    const int n = source.n();
    if (k < 1 || k > n) throw std::domain_error("gamma_distribution: k out of range");
    check_cap(n, k);
    std::map<IntervalSystem, std::int64_t> counts;
    for_each_combination(n, k, [&](const std::vector<int>& j) {
        ++counts[subsample(source, SampleVector(n, j))];
    });
    return counts;
}

BoundaryEstimate boundary_law_estimate(const LimitSet& k, const IntervalSystem& target,
                                       int trials, SeededRng& rng) {
    if (trials < 1) throw std::domain_error("boundary_law_estimate: trials must be >= 1");
    const int dim = target.n();
    std::int64_t hits = 0;
    for (int t = 0; t < trials; ++t) {
        const OrderedSample u = OrderedSample::draw(dim, rng);
        if (sample_system(k, u) == target) ++hits;
    }
    const double p = static_cast<double>(hits) / trials;
    const double z99 = 2.5758293035489004; // standard normal 99.5% quantile
    return {p, z99 * std::sqrt(p * (1.0 - p) / trials)};
}

IntervalSystem spine_tree(int n) {
    if (n < 1) throw std::domain_error("spine_tree: n must be >= 1");
    std::vector<Edge> edges;
    int a = 1, b = n;
    bool leaf_left = true; // first split puts the leaf on the left
    while (a < b) {
        edges.emplace_back(a, b);
        if (leaf_left) ++a;
        else --b;
        leaf_left = !leaf_left;
    }
    return IntervalSystem(n, std::move(edges));
}

IntervalSystem complete_tree(int depth) {
    if (depth < 0) throw std::domain_error("complete_tree: depth must be >= 0");
    const int n = 1 << depth;
    std::vector<Edge> edges;
    for (int l = 0; l < depth; ++l) {
        const int width = 1 << (depth - l);
        for (int j = 0; j < (1 << l); ++j) edges.emplace_back(j * width + 1, (j + 1) * width);
    }
    return IntervalSystem(n, std::move(edges));
}

GammaTable gamma_convergence(TreeFamily family, const IntervalSystem& target,
                             const std::vector<int>& sizes) {
    GammaTable table;
    table.k = target.n();
    table.target = target;
    for (int size : sizes) {
        const IntervalSystem member =
            family == TreeFamily::spine ? spine_tree(size) : complete_tree(size);
        table.entries.emplace_back(member.n(), gamma(target, member));
    }
    return table;
}

ChiSquareReport uniformity_test(const std::vector<std::int64_t>& counts) {
    if (counts.size() < 2) throw std::domain_error("uniformity_test: need at least 2 categories");
    std::int64_t total = 0;
    for (std::int64_t c : counts) {
        if (c < 0) throw std::domain_error("uniformity_test: negative count");
        total += c;
    }
    if (total <= 0) throw std::domain_error("uniformity_test: total count must be positive");
    const double expected = static_cast<double>(total) / counts.size();
    double stat = 0.0;
    for (std::int64_t c : counts) {
        const double d = c - expected;
        stat += d * d / expected;
    }
    return {static_cast<int>(counts.size()), stat, total};
}

double chi_square_critical(int df, double z) {
    const double a = 2.0 / (9.0 * df);
    const double t = 1.0 - a + z * std::sqrt(a);
    return df * t * t * t;
}

} // namespace eip
