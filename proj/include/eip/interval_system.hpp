#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace eip {

/// Non-singleton interval [a,b] of [n], stored as the pair (a,b) with a < b.
using Edge = std::pair<int, int>;

/// Interval system on [n]: a set of intervals of [n]. The empty set and all
/// singletons {j} are members by convention and are not stored; only the
/// non-singleton intervals are kept, sorted lexicographically without
/// duplicates. Equality is structural equality of this canonical storage.
class IntervalSystem {
public:
    explicit IntervalSystem(int n) : n_(n) { validate_ground(); }
    IntervalSystem(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool trivial() const { return edges_.empty(); }
    bool contains(int a, int b) const;

    bool operator==(const IntervalSystem& o) const = default;
    bool operator<(const IntervalSystem& o) const {
        return n_ != o.n_ ? n_ < o.n_ : edges_ < o.edges_;
    }

private:
    void validate_ground() const;
    int n_;
    std::vector<Edge> edges_;
};

/// Permutation of [n] in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(one_line_.size()); }
    const std::vector<int>& one_line() const { return one_line_; }
    int operator()(int i) const { return one_line_[i - 1]; }
    Permutation inverse() const;

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> one_line_;
};

/// Strictly increasing vector j_1 < ... < j_k in [n], with the boundary
/// convention j_0 = -n, j_{k+1} = 2n.
class SampleVector {
public:
    SampleVector(int n, std::vector<int> entries);

    int n() const { return n_; }
    int k() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

    /// Entry with sentinels: at(0) = -n, at(k+1) = 2n.
    int at(int i) const {
        if (i == 0) return -n_;
        if (i == k() + 1) return 2 * n_;
        return entries_[i - 1];
    }

    static SampleVector full(int n);

private:
    int n_;
    std::vector<int> entries_;
};

/// Removes the point k from the ground set [n+1], shifting/shrinking every
/// interval; intervals collapsing to size <= 1 vanish into the implicit part.
IntervalSystem delete_point(const IntervalSystem& sys, int k);

/// Multi-step sampling map: the result contains [a,b] iff some [A,B] in sys
/// satisfies j_{a-1} < A <= j_a <= j_b <= B < j_{b+1}.
IntervalSystem subsample(const IntervalSystem& sys, const SampleVector& j);

/// Increasing enumeration of pi^{-1}([k]).
SampleVector selection_vector(const Permutation& pi, int k);

/// Deletes n, n-1, ..., k+1 with erasers taken from pi; agrees with
/// subsample(sys, selection_vector(pi, k)).
IntervalSystem sequential_delete(const IntervalSystem& sys, const Permutation& pi, int k);

/// Laminar family containing [1,n]: intervals pairwise nested or disjoint.
bool is_schroeder(const IntervalSystem& sys);

/// Schroeder tree in which every internal node has exactly two children.
/// Equivalently: for every j1 < j2 < j3 some interval separates j1,j2 from j3
/// or j2,j3 from j1.
bool is_binary(const IntervalSystem& sys);

/// All stored intervals pairwise disjoint.
bool is_interval_partition(const IntervalSystem& sys);

/// Literal triple-separation test from the binary-tree definition; quadratic
/// in n^3, intended as an oracle for small n.
bool is_binary_by_triples(const IntervalSystem& sys);

inline constexpr int kMaxEnumerationN = 7;

/// Emits all 2^C(n,2) interval systems on [n] in lexicographic order of their
/// sorted edge lists. Throws UnsupportedSizeError for n > kMaxEnumerationN.
void enumerate_interval_systems(int n, const std::function<void(const IntervalSystem&)>& sink);
std::vector<IntervalSystem> all_interval_systems(int n);

} // namespace eip
