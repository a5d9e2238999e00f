#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eip/interval_system.hpp"

namespace eip {

inline constexpr int kMaxLinearizeN = 10;

/// Interval hypergraph on [n]: a set of subsets of [n] of size >= 2 (empty
/// set and singletons implicit) admitting a linear order of [n] under which
/// every edge is an interval. Construction checks that invariant by brute
/// force for n <= kMaxLinearizeN; larger ground sets require the explicit
/// unchecked constructor and carry a `validated() == false` flag.
class IntervalHypergraph {
public:
    IntervalHypergraph(int n, std::vector<std::vector<int>> edges);
    static IntervalHypergraph unchecked(int n, std::vector<std::vector<int>> edges);

    /// Lossless view of an interval system (witnessing order is the identity).
    static IntervalHypergraph from_system(const IntervalSystem& sys);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    bool validated() const { return validated_; }

    bool operator==(const IntervalHypergraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }
    bool operator<(const IntervalHypergraph& o) const {
        return n_ != o.n_ ? n_ < o.n_ : edges_ < o.edges_;
    }

private:
    struct trusted_tag {};
    IntervalHypergraph(trusted_tag, int n, std::vector<std::vector<int>> edges);
    friend IntervalHypergraph restrict_hypergraph(const IntervalHypergraph&, int);
    friend IntervalHypergraph relabel_hypergraph(const IntervalHypergraph&, const Permutation&);

    void canonicalize();
    int n_;
    std::vector<std::vector<int>> edges_;
    bool validated_ = true;
};

/// Edges intersected with [k]; results of size <= 1 are dropped.
IntervalHypergraph restrict_hypergraph(const IntervalHypergraph& h, int k);

/// Edges mapped pointwise through pi.
IntervalHypergraph relabel_hypergraph(const IntervalHypergraph& h, const Permutation& pi);

/// Searches all n! permutations for a consecutive arrangement. On success
/// returns (pi, I) with relabel_hypergraph(from_system(I), pi) == h.
/// Throws UnsupportedSizeError for n > kMaxLinearizeN.
std::optional<std::pair<Permutation, IntervalSystem>> linearize(const IntervalHypergraph& h);

/// Same search on a raw edge list, for testing inputs that may not satisfy
/// the class invariant.
std::optional<std::pair<Permutation, IntervalSystem>>
linearize_edges(int n, const std::vector<std::vector<int>>& edges);

/// [n] is an edge and all edge pairs are nested or disjoint.
bool is_hierarchy(const IntervalHypergraph& h);

} // namespace eip
