#include "eip/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eip/errors.hpp"

namespace eip {

namespace {

void check_edges(int n, const std::vector<std::vector<int>>& edges) {
    if (n < 1) throw std::domain_error("interval hypergraph: ground-set size must be positive");
    for (const auto& e : edges) {
        if (e.size() < 2) throw std::domain_error("interval hypergraph: edges must have size >= 2");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n) throw std::domain_error("interval hypergraph: element out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::domain_error("interval hypergraph: edge elements must be strictly increasing");
        }
    }
}

} // namespace

void IntervalHypergraph::canonicalize() {
    // Canonical edge order: by size, then lexicographically.
    std::sort(edges_.begin(), edges_.end(), [](const auto& l, const auto& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

IntervalHypergraph::IntervalHypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) std::sort(e.begin(), e.end());
    check_edges(n_, edges_);
    canonicalize();
    if (!linearize_edges(n_, edges_))
        throw std::domain_error("interval hypergraph: no consecutive arrangement exists");
}

IntervalHypergraph IntervalHypergraph::unchecked(int n, std::vector<std::vector<int>> edges) {
    IntervalHypergraph h(trusted_tag{}, n, std::move(edges));
    h.validated_ = false;
    return h;
}

IntervalHypergraph::IntervalHypergraph(trusted_tag, int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) std::sort(e.begin(), e.end());
    check_edges(n_, edges_);
    canonicalize();
}

IntervalHypergraph IntervalHypergraph::from_system(const IntervalSystem& sys) {
    std::vector<std::vector<int>> edges;
    edges.reserve(sys.edges().size());
    for (auto [a, b] : sys.edges()) {
        std::vector<int> e(static_cast<std::size_t>(b - a + 1));
        std::iota(e.begin(), e.end(), a);
        edges.push_back(std::move(e));
    }
    return IntervalHypergraph(trusted_tag{}, sys.n(), std::move(edges));
}

IntervalHypergraph restrict_hypergraph(const IntervalHypergraph& h, int k) {
    if (k < 1 || k > h.n()) throw std::domain_error("restrict_hypergraph: k out of range");
    std::vector<std::vector<int>> out;
    for (const auto& e : h.edges()) {
        std::vector<int> cut;
        for (int v : e)
            if (v <= k) cut.push_back(v);
        if (cut.size() >= 2) out.push_back(std::move(cut));
    }
    IntervalHypergraph r(IntervalHypergraph::trusted_tag{}, k, std::move(out));
    r.validated_ = h.validated();
    return r;
}

IntervalHypergraph relabel_hypergraph(const IntervalHypergraph& h, const Permutation& pi) {
    if (pi.n() != h.n()) throw std::domain_error("relabel_hypergraph: permutation size mismatch");
    std::vector<std::vector<int>> out;
    out.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
        std::vector<int> img;
        img.reserve(e.size());
        for (int v : e) img.push_back(pi(v));
        std::sort(img.begin(), img.end());
        out.push_back(std::move(img));
    }
    IntervalHypergraph r(IntervalHypergraph::trusted_tag{}, h.n(), std::move(out));
    r.validated_ = h.validated();
    return r;
}

std::optional<std::pair<Permutation, IntervalSystem>>
linearize_edges(int n, const std::vector<std::vector<int>>& edges) {
    if (n > kMaxLinearizeN)
        throw UnsupportedSizeError("linearize: ground set exceeds the brute-force bound");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    do {
        for (int i = 0; i < n; ++i) pos[line[i]] = i + 1; // sigma(v) = pos[v]
        bool ok = true;
        std::vector<Edge> sys_edges;
        sys_edges.reserve(edges.size());
        for (const auto& e : edges) {
            int lo = n + 1, hi = 0;
            for (int v : e) {
                lo = std::min(lo, pos[v]);
                hi = std::max(hi, pos[v]);
            }
            if (hi - lo + 1 != static_cast<int>(e.size())) {
                ok = false;
                break;
            }
            sys_edges.emplace_back(lo, hi);
        }
        if (ok) {
            Permutation sigma(std::vector<int>(pos.begin() + 1, pos.end()));
            return std::make_pair(sigma.inverse(), IntervalSystem(n, std::move(sys_edges)));
        }
    } while (std::next_permutation(line.begin(), line.end()));
    return std::nullopt;
}

std::optional<std::pair<Permutation, IntervalSystem>> linearize(const IntervalHypergraph& h) {
    return linearize_edges(h.n(), h.edges());
}

bool is_hierarchy(const IntervalHypergraph& h) {
    const int n = h.n();
    if (n > 1) {
        bool has_full = false;
        for (const auto& e : h.edges())
            if (static_cast<int>(e.size()) == n) has_full = true;
        if (!has_full) return false;
    }
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty() && inter != es[i] && inter != es[j]) return false;
        }
    return true;
}

} // namespace eip
