#pragma once

// Visual prominence of line-chart features via epsilon-persistence.
//
// The RDP recursion is ε-independent in its shape: every segment splits at its
// farthest interior vertex, and ε only decides how deep the split is allowed to
// go. A vertex therefore survives simplification at ε exactly when every split
// on its ancestor chain (including its own) has distance > ε. Persistence is
// read off the minimum distance along that chain instead of re-running RDP per
// level.

#include "capcheck/chart_model.hpp"
#include "capcheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string_view>
#include <tuple>
#include <vector>

namespace capcheck {

/// The ε sweep: 0.00, 0.01, ..., 0.25 (26 levels). Level k stands for ε = k/100.
struct EpsilonGrid {
    static constexpr int kLevels = 26;
    static constexpr int kMaxLevel = kLevels - 1;

    static constexpr double value(int level) noexcept { return level / 100.0; }
};

/// A persistence value on the ε grid, stored as its level index.
class Persistence {
public:
    constexpr Persistence() = default;
    constexpr explicit Persistence(int level) : level_(std::clamp(level, 0, EpsilonGrid::kMaxLevel)) {}

    static constexpr Persistence cap() { return Persistence(EpsilonGrid::kMaxLevel); }

    constexpr int level() const noexcept { return level_; }
    constexpr double value() const noexcept { return EpsilonGrid::value(level_); }

    friend constexpr auto operator<=>(Persistence, Persistence) = default;

private:
    int level_ = 0;
};

/// Internal node of the split tree: segment [first, last] broken at `farthest`.
struct SplitNode {
    std::size_t first;
    std::size_t last;
    std::size_t farthest;
    double distance;
};

struct PersistenceProfile {
    std::vector<Persistence> perPoint;
    // Minimum split distance along each vertex's ancestor chain; +inf for endpoints.
    std::vector<double> chainDistance;
    std::vector<SplitNode> splitTree;

    std::size_t size() const noexcept { return perPoint.size(); }

    bool retained(std::size_t v, int level) const { return chainDistance[v] > EpsilonGrid::value(level); }
};

namespace detail {

// Distances this small (the diagonal is 1) are rounding noise on collinear input.
inline constexpr double kCollinearTolerance = 1e-12;

inline double line_distance(const Vertex& a, const Vertex& b, const Vertex& p) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    const double d = len == 0.0 ? std::hypot(p.x - a.x, p.y - a.y) : std::abs(dx * (p.y - a.y) - dy * (p.x - a.x)) / len;
    return d <= kCollinearTolerance ? 0.0 : d;
}

// Farthest interior vertex of [first, last]; ties go to the smallest index.
inline std::pair<std::size_t, double> farthest_interior(const std::vector<Vertex>& v, std::size_t first,
                                                        std::size_t last) {
    std::size_t best = first + 1;
    double bestDist = -1.0;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double d = line_distance(v[first], v[last], v[i]);
        if (d > bestDist) {
            bestDist = d;
            best = i;
        }
    }
    return {best, bestDist};
}

} // namespace detail

/// Indices kept by classic RDP at threshold `epsilon` (a point survives iff
/// its distance to the chord is strictly greater than epsilon).
inline std::vector<std::size_t> rdp_retained(const NormalizedPolyline& polyline, double epsilon) {
    const auto& v = polyline.vertices;
    const std::size_t n = v.size();
    std::vector<char> keep(n, 0);
    if (n == 0) return {};
    keep.front() = keep.back() = 1;

    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [first, last] = stack.back();
        stack.pop_back();
        if (last - first < 2) continue;
        const auto [idx, d] = detail::farthest_interior(v, first, last);
        if (d > epsilon) {
            keep[idx] = 1;
            stack.push_back({first, idx});
            stack.push_back({idx, last});
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

/// Per-vertex ε-persistence: the largest grid ε at which the vertex survives,
/// capped at 0.25. Vertices never kept (even at ε = 0) get 0.
inline PersistenceProfile point_persistence(const NormalizedPolyline& polyline) {
    const auto& v = polyline.vertices;
    const std::size_t n = v.size();
    PersistenceProfile profile;
    profile.perPoint.assign(n, Persistence{});
    profile.chainDistance.assign(n, 0.0);
    if (n == 0) return profile;

    constexpr double inf = std::numeric_limits<double>::infinity();
    profile.chainDistance.front() = profile.chainDistance.back() = inf;

    struct Frame {
        std::size_t first, last;
        double chainMin;
    };
    std::vector<Frame> stack{{0, n - 1, inf}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.last - f.first < 2) continue;
        const auto [idx, d] = detail::farthest_interior(v, f.first, f.last);
        profile.splitTree.push_back({f.first, f.last, idx, d});
        const double chain = std::min(f.chainMin, d);
        profile.chainDistance[idx] = chain;
        stack.push_back({idx, f.last, chain});
        stack.push_back({f.first, idx, chain});
    }

    for (std::size_t i = 0; i < n; ++i) {
        int level = -1;
        for (int k = EpsilonGrid::kMaxLevel; k >= 0; --k) {
            if (profile.retained(i, k)) {
                level = k;
                break;
            }
        }
        profile.perPoint[i] = Persistence(std::max(level, 0));
    }
    return profile;
}

/// Trend persistence between vertices i < j:
/// min(pers(i), pers(j)) - max interior pers + 0.01, clamped to [0, 0.25].
inline Persistence trend_persistence(const PersistenceProfile& profile, std::size_t i, std::size_t j) {
    if (i >= j) throw InvalidRange("trend_persistence requires i < j");
    if (j >= profile.size()) throw InvalidRange("trend_persistence index out of range");
    const int ends = std::min(profile.perPoint[i].level(), profile.perPoint[j].level());
    int interior = 0;
    for (std::size_t k = i + 1; k < j; ++k) interior = std::max(interior, profile.perPoint[k].level());
    return Persistence(ends - interior + 1);
}

enum class FeatureKind { Point, Trend };
enum class Direction { Rise, Fall };
enum class ExtremeKind { LocalMax, LocalMin, Endpoint, Knee };

inline std::string_view to_string(FeatureKind k) { return k == FeatureKind::Point ? "point" : "trend"; }
inline std::string_view to_string(Direction d) { return d == Direction::Rise ? "rise" : "fall"; }
inline std::string_view to_string(ExtremeKind k) {
    switch (k) {
    case ExtremeKind::LocalMax: return "localMax";
    case ExtremeKind::LocalMin: return "localMin";
    case ExtremeKind::Endpoint: return "endpoint";
    case ExtremeKind::Knee: return "knee";
    }
    return "knee";
}

struct ChartFeature {
    FeatureKind kind = FeatureKind::Point;
    // Point: start == end == the vertex. Trend: start < end.
    std::size_t start = 0;
    std::size_t end = 0;
    Persistence persistence;
    int rank = 0;
    Direction direction = Direction::Rise;
    ExtremeKind extremeKind = ExtremeKind::Knee;

    std::size_t index() const noexcept { return start; }
    friend bool operator==(const ChartFeature&, const ChartFeature&) = default;
};

inline ExtremeKind classify_vertex(const NormalizedPolyline& polyline, std::size_t i) {
    const auto& v = polyline.vertices;
    if (i == 0 || i + 1 >= v.size()) return ExtremeKind::Endpoint;
    const double prev = v[i - 1].y, cur = v[i].y, next = v[i + 1].y;
    if (cur >= prev && cur >= next && (cur > prev || cur > next)) return ExtremeKind::LocalMax;
    if (cur <= prev && cur <= next && (cur < prev || cur < next)) return ExtremeKind::LocalMin;
    return ExtremeKind::Knee;
}

/// Pairs (i, j) that appear as consecutive retained vertices at some grid level.
/// A pair's levels form a contiguous interval, so each is emitted once: at the
/// level where it first appears.
inline std::vector<std::pair<std::size_t, std::size_t>> trend_candidates(const PersistenceProfile& profile) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::size_t> previous;
    for (int k = 0; k < EpsilonGrid::kLevels; ++k) {
        std::vector<std::size_t> current;
        for (std::size_t v = 0; v < profile.size(); ++v)
            if (profile.retained(v, k)) current.push_back(v);
        std::size_t p = 0;  // walks `previous`, a superset of `current`
        for (std::size_t c = 0; c + 1 < current.size(); ++c) {
            const std::size_t a = current[c], b = current[c + 1];
            bool existed = false;
            if (k > 0) {
                while (previous[p] < a) ++p;
                existed = p + 1 < previous.size() && previous[p + 1] == b;
            }
            if (!existed) out.emplace_back(a, b);
        }
        previous = std::move(current);
    }
    return out;
}

namespace detail {

inline void rank_features(std::vector<ChartFeature>& features) {
    std::stable_sort(features.begin(), features.end(), [](const ChartFeature& a, const ChartFeature& b) {
        if (a.persistence != b.persistence) return a.persistence > b.persistence;
        if (a.kind != b.kind) return a.kind == FeatureKind::Point;
        return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    });
}

} // namespace detail

/// Every positive-persistence interior point and every realized trend, ranked.
inline std::vector<ChartFeature> all_features(const NormalizedPolyline& polyline, const PersistenceProfile& profile) {
    std::vector<ChartFeature> features;
    const std::size_t n = profile.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (profile.perPoint[i].level() == 0) continue;
        ChartFeature f;
        f.kind = FeatureKind::Point;
        f.start = f.end = i;
        f.persistence = profile.perPoint[i];
        f.extremeKind = classify_vertex(polyline, i);
        features.push_back(f);
    }
    for (const auto& [a, b] : trend_candidates(profile)) {
        ChartFeature f;
        f.kind = FeatureKind::Trend;
        f.start = a;
        f.end = b;
        f.persistence = trend_persistence(profile, a, b);
        f.direction = polyline.vertices[b].y >= polyline.vertices[a].y ? Direction::Rise : Direction::Fall;
        if (f.persistence.level() > 0) features.push_back(f);
    }
    detail::rank_features(features);
    for (std::size_t r = 0; r < features.size(); ++r) features[r].rank = static_cast<int>(r + 1);
    return features;
}

inline constexpr std::size_t kTopFeatures = 5;

/// Top five features by persistence. Ties put points before trends, then the
/// smaller start index first.
inline std::vector<ChartFeature> enumerate_features(const NormalizedPolyline& polyline,
                                                    const PersistenceProfile& profile) {
    auto features = all_features(polyline, profile);
    if (features.size() > kTopFeatures) features.resize(kTopFeatures);
    return features;
}

inline std::vector<ChartFeature> detect_features(const TimeSeries& series, const ChartSpec& spec) {
    const auto clipped = clip(series, spec);
    const auto polyline = normalize(clipped, spec);
    return enumerate_features(polyline, point_persistence(polyline));
}

/// Derivative-based saliency used as a comparison baseline:
/// 0.5 * normalized value + 0.5 * normalized central-difference slope.
inline std::vector<double> baseline_saliency(const TimeSeries& series) {
    const std::size_t n = series.size();
    std::vector<double> t(n), y(n), slope(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = static_cast<double>(days_since_epoch(series[i].t));
        y[i] = series[i].y;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
        slope[i] = (y[hi] - y[lo]) / (t[hi] - t[lo]);
    }
    auto minmax = [](std::vector<double>& xs) {
        const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        const double a = *lo, b = *hi;
        for (auto& x : xs) x = b > a ? (x - a) / (b - a) : 0.0;
    };
    minmax(y);
    minmax(slope);
    std::vector<double> score(n);
    for (std::size_t i = 0; i < n; ++i) score[i] = 0.5 * std::abs(y[i]) + 0.5 * std::abs(slope[i]);
    return score;
}

} // namespace capcheck
