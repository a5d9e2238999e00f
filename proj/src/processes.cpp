#include "eip/processes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eip/martin.hpp"

namespace eip {

EraserSequence::EraserSequence(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1 || values_[i] > static_cast<int>(i) + 2)
            throw std::domain_error("eraser sequence: eta_n must lie in [n+1]");
    }
}

USequence::USequence(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("u sequence: must be non-empty");
    std::vector<double> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("u sequence: values must be pairwise distinct");
}

USequence USequence::draw(int n, SeededRng& rng) {
    std::vector<double> v;
    v.reserve(n);
    std::vector<double> sorted;
    sorted.reserve(n);
    while (static_cast<int>(v.size()) < n) {
        const double u = rng.uniform01();
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
        if (it != sorted.end() && *it == u) continue; // redraw exact duplicate
        sorted.insert(it, u);
        v.push_back(u);
    }
    return USequence(std::move(v));
}

PermutationSequence::PermutationSequence(std::vector<Permutation> perms) : perms_(std::move(perms)) {
    for (std::size_t n = 0; n < perms_.size(); ++n) {
        if (perms_[n].n() != static_cast<int>(n) + 1)
            throw std::domain_error("permutation sequence: S_n must be a permutation of [n]");
        if (n + 1 < perms_.size()) {
            std::vector<int> erased;
            for (int v : perms_[n + 1].one_line())
                if (v != static_cast<int>(n) + 2) erased.push_back(v);
            if (erased != perms_[n].one_line())
                throw std::domain_error("permutation sequence: erasing 'n+1' must yield S_n");
        }
    }
}

bool EipTrajectory::consistent() const {
    const int n = size();
    if (static_cast<int>(erasers.values().size()) != n - 1) return false;
    for (int m = 1; m < n; ++m)
        if (delete_point(systems[m], erasers.values()[m - 1]) != systems[m - 1]) return false;
    return true;
}

namespace {

// Fenwick tree counting inserted sorted-order ranks.
class Fenwick {
public:
    explicit Fenwick(int n) : tree_(n + 1, 0) {}
    void insert(int i) {
        for (; i < static_cast<int>(tree_.size()); i += i & (-i)) ++tree_[i];
    }
    int prefix(int i) const { // count of inserted ranks <= i
        int s = 0;
        for (; i > 0; i -= i & (-i)) s += tree_[i];
        return s;
    }

private:
    std::vector<int> tree_;
};

std::vector<int> global_ranks(const std::vector<double>& v) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) -
                                    sorted.begin()) + 1;
    return ranks;
}

} // namespace

EraserSequence eta_from_u(const USequence& u) {
    const int n = u.size();
    const std::vector<int> ranks = global_ranks(u.values());
    Fenwick fen(n);
    fen.insert(ranks[0]);
    std::vector<int> eta;
    eta.reserve(n - 1);
    for (int k = 1; k < n; ++k) {
        fen.insert(ranks[k]);
        eta.push_back(fen.prefix(ranks[k])); // #{i in [k+1] : U_i <= U_{k+1}}
    }
    return EraserSequence(std::move(eta));
}

namespace {

Permutation argsort_perm(const std::vector<double>& v, int n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a - 1] < v[b - 1]; });
    return Permutation(std::move(idx));
}

} // namespace

PermutationSequence perm_from_u(const USequence& u) {
    std::vector<Permutation> perms;
    perms.reserve(u.size());
    for (int n = 1; n <= u.size(); ++n) perms.push_back(argsort_perm(u.values(), n));
    return PermutationSequence(std::move(perms));
}

PermutationSequence perm_from_eta(const EraserSequence& eta, int n_max) {
    if (n_max < 1 || n_max > static_cast<int>(eta.values().size()) + 1)
        throw std::domain_error("perm_from_eta: n_max out of range");
    std::vector<Permutation> perms;
    perms.reserve(n_max);
    std::vector<int> line{1};
    perms.emplace_back(line);
    for (int n = 2; n <= n_max; ++n) {
        line.insert(line.begin() + (eta.values()[n - 2] - 1), n);
        perms.emplace_back(line);
    }
    return PermutationSequence(std::move(perms));
}

EraserSequence eta_from_perm(const PermutationSequence& s) {
    std::vector<int> eta;
    eta.reserve(s.size() - 1);
    for (int n = 2; n <= s.size(); ++n) {
        const auto& line = s.at(n).one_line();
        const auto it = std::find(line.begin(), line.end(), n);
        eta.push_back(static_cast<int>(it - line.begin()) + 1);
    }
    return EraserSequence(std::move(eta));
}

std::pair<EipTrajectory, USequence> simulate_eip(const LimitSet& k, int n, SeededRng& rng) {
    if (n < 1) throw std::domain_error("simulate_eip: N must be >= 1");
    USequence u = USequence::draw(n, rng);

    std::vector<double> sorted = u.values();
    std::sort(sorted.begin(), sorted.end());
    const std::vector<int> rank_of = global_ranks(u.values());

    // Per stored point, precompute how many of the N values fall strictly
    // below each coordinate and whether a value ties it exactly.
    struct Coord {
        int below;   // #{j : sorted_j < c}
        int tie_idx; // 1-based arrival index of an exactly tying value, or 0
    };
    auto coord_of = [&](double c) {
        Coord out{};
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        out.below = static_cast<int>(it - sorted.begin());
        out.tie_idx = 0;
        if (it != sorted.end() && *it == c) {
            for (int i = 0; i < n; ++i)
                if (u.values()[i] == c) out.tie_idx = i + 1;
        }
        return out;
    };
    std::vector<std::pair<Coord, Coord>> coords;
    coords.reserve(k.points().size());
    for (const auto& [x, y] : k.points()) coords.emplace_back(coord_of(x), coord_of(y));

    Fenwick fen(n);
    std::vector<IntervalSystem> systems;
    systems.reserve(n);
    std::vector<int> eta;
    eta.reserve(n > 1 ? n - 1 : 0);
    for (int m = 1; m <= n; ++m) {
        fen.insert(rank_of[m - 1]);
        if (m >= 2) eta.push_back(fen.prefix(rank_of[m - 1]));
        std::vector<Edge> edges;
        for (const auto& [cx, cy] : coords) {
            if ((cx.tie_idx != 0 && cx.tie_idx <= m) || (cy.tie_idx != 0 && cy.tie_idx <= m))
                continue;
            const int a = fen.prefix(cx.below) + 1;
            const int b = fen.prefix(cy.below);
            if (a < b) edges.emplace_back(a, b);
        }
        systems.emplace_back(m, std::move(edges));
    }

    EipTrajectory traj{std::move(systems), EraserSequence(std::move(eta))};
    if (!traj.consistent())
        throw std::logic_error("simulate_eip: trajectory violates the deletion invariant");
    return {std::move(traj), std::move(u)};
}

EipTrajectory backward_chain(const IntervalSystem& top, SeededRng& rng) {
    const int n = top.n();
    std::vector<IntervalSystem> systems;
    systems.reserve(n);
    std::vector<int> eta(n > 1 ? n - 1 : 0);
    systems.push_back(top);
    for (int m = n - 1; m >= 1; --m) {
        eta[m - 1] = rng.uniform_1_to(m + 1);
        systems.push_back(delete_point(systems.back(), eta[m - 1]));
    }
    std::reverse(systems.begin(), systems.end());
    return EipTrajectory{std::move(systems), EraserSequence(std::move(eta))};
}

IntervalSystem remy_step(const IntervalSystem& tree, SeededRng& rng) {
    if (!is_binary(tree)) throw std::domain_error("remy_step: input must be a binary tree");
    const int n = tree.n();
    const auto node = static_cast<int>(rng.uniform_below(2 * n - 1));
    int a, b;
    if (node < n) {
        a = b = node + 1; // leaf [a,a]
    } else {
        const Edge e = tree.edges()[node - n];
        a = e.first;
        b = e.second;
    }
    const bool insert_left = rng.coin();

    std::vector<Edge> out;
    out.reserve(tree.edges().size() + 1);
    for (auto [A, B] : tree.edges()) {
        if (A >= a && B <= b) {
            // inside the cut subtree
            if (insert_left) out.emplace_back(A + 1, B + 1);
            else out.emplace_back(A, B);
        } else if (A <= a && b <= B) {
            out.emplace_back(A, B + 1); // proper ancestor
        } else if (B < a) {
            out.emplace_back(A, B);
        } else {
            out.emplace_back(A + 1, B + 1); // entirely right of the subtree
        }
    }
    out.emplace_back(a, b + 1); // cherry root
    return IntervalSystem(n + 1, std::move(out));
}

IntervalSystem remy_chain(int n, SeededRng& rng) {
    if (n < 1) throw std::domain_error("remy_chain: n must be >= 1");
    IntervalSystem tree(1);
    for (int m = 1; m < n; ++m) tree = remy_step(tree, rng);
    return tree;
}

IntervalHypergraph exchangeable_hypergraph(const IntervalSystem& sys, const Permutation& s_n) {
    return relabel_hypergraph(IntervalHypergraph::from_system(sys), s_n);
}

namespace {

BigInt uniform_bigint_below(SeededRng& rng, const BigInt& bound) {
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt r = 0;
        for (unsigned w = 0; w < words; ++w) {
            r <<= 64;
            r += rng.next_u64();
        }
        r >>= words * 64 - bits;
        if (r < bound) return r;
    }
}

// Uniform 231-avoider of {1,...,m}, written into out as values offset+1..offset+m.
void sample_231_rec(int m, int offset, SeededRng& rng, std::vector<int>& out) {
    if (m == 0) return;
    if (m == 1) {
        out.push_back(offset + 1);
        return;
    }
    // Position j of the maximum: weight C_{j-1} * C_{m-j}.
    const BigInt r = uniform_bigint_below(rng, catalan(m));
    BigInt cum = 0;
    int j = m;
    for (int cand = 1; cand <= m; ++cand) {
        cum += catalan(cand - 1) * catalan(m - cand);
        if (r < cum) {
            j = cand;
            break;
        }
    }
    sample_231_rec(j - 1, offset, rng, out);        // left block: values offset+1..offset+j-1
    out.push_back(offset + m);                      // the maximum
    sample_231_rec(m - j, offset + j - 1, rng, out); // right block: values offset+j..offset+m-1
}

} // namespace

Permutation sample_231_avoiding(int n, SeededRng& rng) {
    if (n < 1) throw std::domain_error("sample_231_avoiding: n must be >= 1");
    std::vector<int> line;
    line.reserve(n);
    sample_231_rec(n, 0, rng, line);
    return Permutation(std::move(line));
}

std::vector<Point> permutation_graph(const Permutation& sigma) {
    const double n = sigma.n();
    std::vector<Point> pts;
    pts.reserve(sigma.n());
    for (int i = 1; i <= sigma.n(); ++i) pts.emplace_back(i / n, sigma(i) / n);
    return pts;
}

bool avoids_231(const Permutation& sigma) {
    const auto& s = sigma.one_line();
    const int n = sigma.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (s[k] < s[i] && s[i] < s[j]) return false;
    return true;
}

} // namespace eip
