#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eip/interval_system.hpp"
#include "eip/limit.hpp"
#include "eip/rng.hpp"

namespace eip {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);
const BigInt& catalan(int n);

/// Combination cap for exact gamma enumeration.
inline constexpr std::int64_t kGammaEnumerationCap = 10'000'000;

/// Exact density gamma(target, source) = #{j : subsample(source, j) = target}
/// normalized by C(n,k). Zero when k > n. Throws UnsupportedSizeError when
/// C(n,k) exceeds the cap.
Rational gamma(const IntervalSystem& target, const IntervalSystem& source);

/// One enumeration pass bucketing subsample(source, j) over all j in [k:n];
/// values sum to C(n,k).
std::map<IntervalSystem, std::int64_t> gamma_distribution(const IntervalSystem& source, int k);

/// Per-target densities of target over growing source sizes.
struct GammaTable {
    int k = 0;
    IntervalSystem target{1};
    std::vector<std::pair<int, Rational>> entries; // (source size n, gamma)
};

struct BoundaryEstimate {
    double estimate;
    double half_width; // 99% normal-approximation half width
};

/// Monte Carlo frequency of sample_system(K, k sorted uniforms) == target.
BoundaryEstimate boundary_law_estimate(const LimitSet& k, const IntervalSystem& target,
                                       int trials, SeededRng& rng);

enum class TreeFamily { spine, complete };

/// Spine (comb) tree on [n]: alternating leaf side, first leaf on the left.
IntervalSystem spine_tree(int n);

/// Complete binary tree on [2^depth].
IntervalSystem complete_tree(int depth);

/// Tabulates exact gamma(target, family member) over the given sizes. For
/// the complete family a size means the depth d (ground set 2^d).
GammaTable gamma_convergence(TreeFamily family, const IntervalSystem& target,
                             const std::vector<int>& sizes);

struct ChiSquareReport {
    int categories = 0;
    double statistic = 0.0;
    std::int64_t samples = 0;
};

/// Pearson statistic against the uniform null.
ChiSquareReport uniformity_test(const std::vector<std::int64_t>& counts);

/// Wilson-Hilferty upper critical value of chi-square with df degrees of
/// freedom at upper tail probability alpha (z is the standard normal
/// quantile for 1 - alpha).
double chi_square_critical(int df, double z);

} // namespace eip
