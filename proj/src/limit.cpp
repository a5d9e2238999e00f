#include "eip/limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eip {

LimitSet::LimitSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const auto& [x, y] : points_) {
        if (!(0.0 <= x && x < y && y <= 1.0))
            throw std::domain_error("limit set: points must satisfy 0 <= x < y <= 1");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

OrderedSample::OrderedSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("ordered sample: k must be positive");
    double prev = -1.0;
    for (double v : values_) {
        if (!(v >= 0.0 && v <= 1.0) || v <= prev)
            throw std::domain_error("ordered sample: values must be strictly increasing in [0,1]");
        prev = v;
    }
}

OrderedSample OrderedSample::draw(int k, SeededRng& rng) {
    std::vector<double> v;
    v.reserve(k);
    while (static_cast<int>(v.size()) < k) {
        const double u = rng.uniform01();
        if (std::find(v.begin(), v.end(), u) == v.end()) v.push_back(u);
    }
    std::sort(v.begin(), v.end());
    return OrderedSample(std::move(v));
}

LimitSet scale(const IntervalSystem& sys) {
    const double n = sys.n();
    std::vector<Point> pts;
    pts.reserve(sys.edges().size() + sys.n());
    // The implicit singletons {j} are members of every system and scale to
    // the off-diagonal points ((j-1)/n, j/n); without them the Hausdorff
    // bound in terms of the empirical CDF would fail.
    for (int j = 1; j <= sys.n(); ++j) pts.emplace_back((j - 1) / n, j / n);
    for (auto [a, b] : sys.edges()) pts.emplace_back((a - 1) / n, b / n);
    return LimitSet(std::move(pts));
}

namespace {

inline double dist1(const Point& p, const Point& q) {
    return std::abs(p.first - q.first) + std::abs(p.second - q.second);
}

// One-sided deviation: max over stored points of `from` of the distance to
// (points of `to` union diagonal). L1 distance to the diagonal is y - x.
double one_sided(const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
        double best = p.second - p.first;
        for (const auto& q : to) best = std::min(best, dist1(p, q));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

double hausdorff(const LimitSet& k1, const LimitSet& k2) {
    return std::max(one_sided(k1.points(), k2.points()), one_sided(k2.points(), k1.points()));
}

double hausdorff_points(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty())
        throw std::domain_error("hausdorff_points: sets must be non-empty");
    auto side = [](const std::vector<Point>& from, const std::vector<Point>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = dist1(p, to.front());
            for (const auto& q : to) best = std::min(best, dist1(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(side(a, b), side(b, a));
}

IntervalSystem sample_system(const LimitSet& k, const OrderedSample& u) {
    const auto& us = u.values();
    const int kk = u.k();
    std::vector<Edge> edges;
    for (const auto& [x, y] : k.points()) {
        // a-1 = #{u_i < x}; the strict inequalities fail on exact ties.
        const auto lx = std::lower_bound(us.begin(), us.end(), x);
        if (lx != us.end() && *lx == x) continue;
        const auto ly = std::lower_bound(us.begin(), us.end(), y);
        if (ly != us.end() && *ly == y) continue;
        const int a = static_cast<int>(lx - us.begin()) + 1;
        const int b = static_cast<int>(ly - us.begin());
        if (a < b && b <= kk) edges.emplace_back(a, b);
    }
    return IntervalSystem(kk, std::move(edges));
}

OrderedSample scale_vector(const SampleVector& j) {
    const double n = j.n();
    std::vector<double> out;
    out.reserve(j.k());
    for (int ji : j.entries()) out.push_back((2.0 * ji - 1.0) / (2.0 * n));
    return OrderedSample(std::move(out));
}

std::pair<double, double> cdf_sup_deviation(const OrderedSample& u) {
    const int k = u.k();
    double d = 0.0;
    for (int i = 1; i <= k; ++i) {
        const double ui = u.at(i);
        d = std::max(d, std::abs(static_cast<double>(i) / k - ui));
        d = std::max(d, std::abs(static_cast<double>(i - 1) / k - ui));
    }
    // The jump points carry the sup for both F_u and its left-continuous
    // version; the two deviations coincide.
    return {d, d};
}

bool intersects_closed(const LimitSet& k, const Rectangle& r) {
    for (const auto& [x, y] : k.points())
        if (r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi) return true;
    const double lo = std::max({r.x_lo, r.y_lo, 0.0});
    const double hi = std::min({r.x_hi, r.y_hi, 1.0});
    return lo <= hi;
}

bool intersects_open(const LimitSet& k, const Rectangle& r) {
    for (const auto& [x, y] : k.points())
        if (r.x_lo < x && x < r.x_hi && r.y_lo < y && y < r.y_hi) return true;
    const double lo = std::max(r.x_lo, r.y_lo);
    const double hi = std::min(r.x_hi, r.y_hi);
    return lo < hi && lo < 1.0 && hi > 0.0;
}

LimitSet spine_limit(int resolution) {
    if (resolution < 1) throw std::domain_error("spine_limit: resolution must be >= 1");
    std::vector<Point> pts;
    pts.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
        const double x = 0.5 * i / resolution;
        pts.emplace_back(x, 1.0 - x);
    }
    return LimitSet(std::move(pts));
}

LimitSet complete_tree_limit(int depth) {
    if (depth < 0) throw std::domain_error("complete_tree_limit: depth must be >= 0");
    std::vector<Point> pts;
    for (int l = 0; l <= depth; ++l) {
        const double scale = std::ldexp(1.0, -l); // 2^-l
        for (int j = 0; j < (1 << l); ++j) pts.emplace_back(j * scale, (j + 1) * scale);
    }
    return LimitSet(std::move(pts));
}

bool is_schroeder_limit(const LimitSet& k) {
    bool has_root = false;
    for (const auto& [x, y] : k.points())
        if (x == 0.0 && y == 1.0) has_root = true;
    if (!has_root) return false;
    for (const auto& [x1, y1] : k.points())
        for (const auto& [x2, y2] : k.points())
            if (x1 < x2 && x2 < y1 && y2 > y1) return false;
    return true;
}

bool is_partition_limit(const LimitSet& k) {
    for (const auto& [x1, y1] : k.points())
        for (const auto& [x2, y2] : k.points()) {
            if (x1 == x2 && y1 == y2) continue;
            if (!(y1 <= x2 || y2 <= x1)) return false;
        }
    return true;
}

BinaryLimitVerdict is_binary_limit_mc(const LimitSet& k, int trials, std::uint64_t seed,
                                      double threshold) {
    if (trials < 1) throw std::domain_error("is_binary_limit_mc: trials must be positive");
    if (!is_schroeder_limit(k)) throw std::domain_error("is_binary_limit_mc: input is not a Schroeder limit");
    SeededRng rng(seed);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        const OrderedSample u = OrderedSample::draw(3, rng);
        if (is_binary(sample_system(k, u))) ++hits;
    }
    const double estimate = static_cast<double>(hits) / trials;
    return {estimate, estimate >= threshold};
}

} // namespace eip
