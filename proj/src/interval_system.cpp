#include "eip/interval_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eip/errors.hpp"

namespace eip {

void IntervalSystem::validate_ground() const {
    if (n_ < 1) throw std::domain_error("interval system: ground-set size must be positive");
}

IntervalSystem::IntervalSystem(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    validate_ground();
    for (const auto& [a, b] : edges_) {
        if (a < 1 || a >= b || b > n_)
            throw std::domain_error("interval system: edge out of range or singleton");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool IntervalSystem::contains(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = static_cast<int>(one_line_.size());
    if (n < 1) throw std::domain_error("permutation: empty one-line notation");
    std::vector<char> seen(n + 1, 0);
    for (int v : one_line_) {
        if (v < 1 || v > n || seen[v]) throw std::domain_error("permutation: not a bijection of [n]");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (int i = 0; i < n(); ++i) inv[one_line_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

SampleVector::SampleVector(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw std::domain_error("sample vector: n must be positive");
    if (entries_.empty() || static_cast<int>(entries_.size()) > n_)
        throw std::domain_error("sample vector: k must satisfy 1 <= k <= n");
    int prev = 0;
    for (int j : entries_) {
        if (j <= prev || j > n_) throw std::domain_error("sample vector: entries must be strictly increasing in [n]");
        prev = j;
    }
}

SampleVector SampleVector::full(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return SampleVector(n, std::move(v));
}

IntervalSystem delete_point(const IntervalSystem& sys, int k) {
    const int n1 = sys.n();
    if (n1 < 2) throw std::domain_error("delete_point: ground set too small");
    if (k < 1 || k > n1) throw std::domain_error("delete_point: k out of range");
    std::vector<Edge> out;
    out.reserve(sys.edges().size());
    for (auto [a, b] : sys.edges()) {
        if (k < a) {
            --a;
            --b;
        } else if (k <= b) {
            --b;
        }
        if (a < b) out.emplace_back(a, b);
    }
    return IntervalSystem(n1 - 1, std::move(out));
}

IntervalSystem subsample(const IntervalSystem& sys, const SampleVector& j) {
    if (j.n() != sys.n()) throw std::domain_error("subsample: sample vector size mismatch");
    const auto& js = j.entries();
    const int k = j.k();
    std::vector<Edge> out;
    for (auto [A, B] : sys.edges()) {
        // a = least index with j_a >= A, b = greatest index with j_b <= B.
        const auto lo = std::lower_bound(js.begin(), js.end(), A);
        const auto hi = std::upper_bound(js.begin(), js.end(), B);
        if (lo == js.end() || hi == js.begin()) continue;
        const int a = static_cast<int>(lo - js.begin()) + 1;
        const int b = static_cast<int>(hi - js.begin());
        if (a < b && b <= k) out.emplace_back(a, b);
    }
    return IntervalSystem(k, std::move(out));
}

SampleVector selection_vector(const Permutation& pi, int k) {
    if (k < 1 || k > pi.n()) throw std::domain_error("selection_vector: k out of range");
    std::vector<int> out;
    out.reserve(k);
    for (int i = 1; i <= pi.n(); ++i)
        if (pi(i) <= k) out.push_back(i);
    return SampleVector(pi.n(), std::move(out));
}

IntervalSystem sequential_delete(const IntervalSystem& sys, const Permutation& pi, int k) {
    if (pi.n() != sys.n()) throw std::domain_error("sequential_delete: permutation size mismatch");
    if (k < 1 || k > sys.n()) throw std::domain_error("sequential_delete: k out of range");
    std::vector<int> line = pi.one_line();
    IntervalSystem cur = sys;
    for (int m = sys.n(); m > k; --m) {
        // Eraser i_{m-1} = (pi restricted to [m])^{-1}(m): position of the
        // current maximum in the shrinking one-line notation.
        const auto it = std::find(line.begin(), line.end(), m);
        const int pos = static_cast<int>(it - line.begin()) + 1;
        cur = delete_point(cur, pos);
        line.erase(it);
    }
    return cur;
}

bool is_schroeder(const IntervalSystem& sys) {
    const int n = sys.n();
    if (n == 1) return true;
    if (!sys.contains(1, n)) return false;
    // Laminar check: visit ancestors before descendants (start ascending,
    // end descending) and require each edge to nest in the innermost open one.
    std::vector<Edge> edges = sys.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        return l.first != r.first ? l.first < r.first : l.second > r.second;
    });
    std::vector<Edge> stack;
    for (const auto& e : edges) {
        while (!stack.empty() && stack.back().second < e.first) stack.pop_back();
        if (!stack.empty() && e.second > stack.back().second) return false;
        stack.push_back(e);
    }
    return true;
}

bool is_binary(const IntervalSystem& sys) {
    // A laminar family containing [1,n] has at most n-1 members, with
    // equality exactly when every internal node has two children.
    return is_schroeder(sys) && static_cast<int>(sys.edges().size()) == sys.n() - 1;
}

bool is_binary_by_triples(const IntervalSystem& sys) {
    if (!is_schroeder(sys)) return false;
    const int n = sys.n();
    for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2)
            for (int j3 = j2 + 1; j3 <= n; ++j3) {
                bool separated = false;
                for (auto [a, b] : sys.edges()) {
                    if ((a <= j1 && j2 <= b && b < j3) || (j1 < a && a <= j2 && j3 <= b)) {
                        separated = true;
                        break;
                    }
                }
                if (!separated) return false;
            }
    return true;
}

bool is_interval_partition(const IntervalSystem& sys) {
    const auto& es = sys.edges();
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i].first <= es[i - 1].second) return false;
    return true;
}

namespace {

void enumerate_rec(int n, const std::vector<Edge>& pairs, std::size_t next, std::vector<Edge>& acc,
                   const std::function<void(const IntervalSystem&)>& sink) {
    sink(IntervalSystem(n, acc));
    for (std::size_t i = next; i < pairs.size(); ++i) {
        acc.push_back(pairs[i]);
        enumerate_rec(n, pairs, i + 1, acc, sink);
        acc.pop_back();
    }
}

} // namespace

void enumerate_interval_systems(int n, const std::function<void(const IntervalSystem&)>& sink) {
    if (n < 1) throw std::domain_error("enumerate_interval_systems: n must be positive");
    if (n > kMaxEnumerationN)
        throw UnsupportedSizeError("enumerate_interval_systems: n exceeds the enumeration bound");
    std::vector<Edge> pairs;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> acc;
    enumerate_rec(n, pairs, 0, acc, sink);
}

std::vector<IntervalSystem> all_interval_systems(int n) {
    std::vector<IntervalSystem> out;
    enumerate_interval_systems(n, [&](const IntervalSystem& s) { out.push_back(s); });
    return out;
}

} // namespace eip
