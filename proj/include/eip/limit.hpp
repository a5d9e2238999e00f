#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eip/interval_system.hpp"
#include "eip/rng.hpp"

namespace eip {

using Point = std::pair<double, double>;

/// Computable limit object: a finite set of off-diagonal points (x,y) with
/// 0 <= x < y <= 1, together with the diagonal {(t,t) : t in [0,1]} which is
/// an implicit member of every limit set and is never stored.
class LimitSet {
public:
    LimitSet() = default;
    explicit LimitSet(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    bool pure_diagonal() const { return points_.empty(); }

    bool operator==(const LimitSet& o) const = default;

private:
    std::vector<Point> points_;
};

/// Axis-aligned rectangle; bounds may use the sentinel values -1 and 2.
struct Rectangle {
    double x_lo, x_hi, y_lo, y_hi;
};

/// Strictly increasing u_1 < ... < u_k in [0,1], with the conventions
/// u_0 = -1 and u_{k+1} = 2.
class OrderedSample {
public:
    explicit OrderedSample(std::vector<double> values);

    int k() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    double at(int i) const {
        if (i == 0) return -1.0;
        if (i == k() + 1) return 2.0;
        return values_[i - 1];
    }

    /// Sorts k fresh uniforms from rng (redrawing exact duplicates).
    static OrderedSample draw(int k, SeededRng& rng);

private:
    std::vector<double> values_;
};

/// Scaling n^{-1}I: stored points {((a-1)/n, b/n) : [a,b] in I}, taken over
/// all non-empty intervals of I including the implicit singletons.
LimitSet scale(const IntervalSystem& sys);

/// Exact Hausdorff distance of (points1 u diagonal) vs (points2 u diagonal)
/// under the L1 ground metric; point-to-diagonal distance is y - x.
double hausdorff(const LimitSet& k1, const LimitSet& k2);

/// Hausdorff distance between two plain finite point sets (no implicit
/// diagonal), L1 ground metric. Both sets must be non-empty.
double hausdorff_points(const std::vector<Point>& a, const std::vector<Point>& b);

/// Sampling map: [a,b] is an edge iff a stored point (x,y) satisfies
/// u_{a-1} < x < u_a and u_b < y < u_{b+1}. Ties fail the strict
/// inequalities; diagonal points never produce non-singleton edges.
IntervalSystem sample_system(const LimitSet& k, const OrderedSample& u);

/// Midpoint scaling n^{-1}j = ((2j_i - 1)/(2n))_i.
OrderedSample scale_vector(const SampleVector& j);

/// Sup deviations of the empirical CDF of u from the identity:
/// (sup |F_u - id|, sup |F^-_u - id|), both attained at jump points.
std::pair<double, double> cdf_sup_deviation(const OrderedSample& u);

bool intersects_closed(const LimitSet& k, const Rectangle& r);
bool intersects_open(const LimitSet& k, const Rectangle& r);

/// Discretized anti-diagonal segment {(x,1-x) : 0 <= x <= 0.5}: the m points
/// (i/(2m), 1 - i/(2m)) for i = 0..m-1 (the diagonal endpoint is implicit).
LimitSet spine_limit(int resolution);

/// Dyadic family ((j/2^l, (j+1)/2^l)) for l = 0..depth, j = 0..2^l - 1.
LimitSet complete_tree_limit(int depth);

/// (0,1) stored and no two stored points overlap as intervals.
bool is_schroeder_limit(const LimitSet& k);

/// Stored points pairwise disjoint as open intervals.
bool is_partition_limit(const LimitSet& k);

/// Monte Carlo estimate of P(3-point sample is a binary tree); verdict is
/// estimate >= threshold. Probabilistic predicate.
struct BinaryLimitVerdict {
    double estimate;
    bool verdict;
};
BinaryLimitVerdict is_binary_limit_mc(const LimitSet& k, int trials, std::uint64_t seed,
                                      double threshold);

} // namespace eip
