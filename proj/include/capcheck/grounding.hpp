#pragma once

// Grounding caption references in chart data, the factual-direction check, and
// matching grounded references against prominent features.

#include "capcheck/caption.hpp"
#include "capcheck/chart_model.hpp"
#include "capcheck/prominence.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace capcheck {

struct Target {
    FeatureKind kind = FeatureKind::Point;
    std::size_t start = 0;  // Point: start == end
    std::size_t end = 0;

    friend bool operator==(const Target&, const Target&) = default;
};

enum class GroundStatus {
    Grounded,
    OutOfChart,  // a mentioned time window holds no chart points
    TooNarrow,   // the windows hold points, but not enough to form an ordered trend
};

inline std::string_view to_string(GroundStatus s) {
    switch (s) {
    case GroundStatus::Grounded: return "grounded";
    case GroundStatus::OutOfChart: return "outOfChart";
    case GroundStatus::TooNarrow: return "tooNarrow";
    }
    return "grounded";
}

struct GroundedReference {
    ReferencePair pair;
    GroundStatus status = GroundStatus::Grounded;
    std::optional<Target> target;
    bool factualError = false;

    bool grounded() const noexcept { return status == GroundStatus::Grounded; }
};

namespace detail {

inline std::vector<std::size_t> points_where(const TimeSeries& series, auto&& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < series.size(); ++i)
        if (pred(series[i].t)) out.push_back(i);
    return out;
}

// Earliest index with the largest (or smallest) value, restricted to indices
// accepted by `allow`.
inline std::optional<std::size_t> extreme(const TimeSeries& series, const std::vector<std::size_t>& candidates,
                                          bool largest, auto&& allow) {
    std::optional<std::size_t> best;
    for (auto i : candidates) {
        if (!allow(i)) continue;
        if (!best || (largest ? series[i].y > series[*best].y : series[i].y < series[*best].y)) best = i;
    }
    return best;
}

} // namespace detail

/// Resolves a pair to chart points. Extrema take the largest/smallest value in
/// the referenced window; a rise runs from the lowest start candidate to the
/// highest end candidate (a fall the other way round). A missing start bound
/// means every point before the end window; a missing end bound every point
/// after the start window. Value ties go to the earliest point.
inline GroundedReference ground(const ReferencePair& pair, const TimeSeries& series) {
    GroundedReference out{pair, GroundStatus::Grounded, std::nullopt, false};
    const TimeReference* sref = pair.start_ref();
    const TimeReference* eref = pair.end_ref();
    const auto kind = pair.description.kind;
    auto any = [](std::size_t) { return true; };

    if (!is_trend(kind)) {
        const auto candidates = detail::points_where(series, [&](Date t) {
            return (!sref || sref->window.first <= t) && (!eref || t <= eref->window.last);
        });
        if (candidates.empty()) {
            out.status = GroundStatus::OutOfChart;
            return out;
        }
        const auto idx = detail::extreme(series, candidates, kind == DescriptionKind::LocalMax, any);
        out.target = Target{FeatureKind::Point, *idx, *idx};
        return out;
    }

    if (!sref && !eref) {
        out.status = GroundStatus::TooNarrow;
        return out;
    }
    const auto startCands = sref ? detail::points_where(series, [&](Date t) { return sref->window.contains(t); })
                                 : detail::points_where(series, [&](Date t) { return t < eref->window.first; });
    const auto endCands = eref ? detail::points_where(series, [&](Date t) { return eref->window.contains(t); })
                               : detail::points_where(series, [&](Date t) { return sref->window.last < t; });
    if ((sref && startCands.empty()) || (eref && endCands.empty())) {
        out.status = GroundStatus::OutOfChart;
        return out;
    }
    if (startCands.empty() || endCands.empty()) {
        out.status = GroundStatus::TooNarrow;
        return out;
    }

    const bool rise = kind == DescriptionKind::Rise;
    auto start = detail::extreme(series, startCands, !rise, any);
    auto end = detail::extreme(series, endCands, rise, [&](std::size_t i) { return i > *start; });
    if (!end) {
        end = detail::extreme(series, endCands, rise, any);
        start = detail::extreme(series, startCands, !rise, [&](std::size_t i) { return i < *end; });
    }
    if (!start || !end) {
        out.status = GroundStatus::TooNarrow;
        return out;
    }
    out.target = Target{FeatureKind::Trend, *start, *end};
    return out;
}

/// True when a trend claim contradicts the data between its grounded
/// endpoints. Equal values never count as a contradiction.
inline bool check_factual(const GroundedReference& ref, const TimeSeries& series) {
    if (!ref.target || ref.target->kind != FeatureKind::Trend) return false;
    const double a = series[ref.target->start].y;
    const double b = series[ref.target->end].y;
    switch (ref.pair.description.kind) {
    case DescriptionKind::Rise: return b < a;
    case DescriptionKind::Fall: return b > a;
    default: return false;
    }
}

/// |intersection| and |union| of the inclusive index ranges two trends cover.
struct Coverage {
    std::size_t intersection = 0;
    std::size_t unionSize = 0;

    double ratio() const { return unionSize == 0 ? 0.0 : static_cast<double>(intersection) / unionSize; }
};

inline Coverage trend_coverage(std::size_t aStart, std::size_t aEnd, std::size_t bStart, std::size_t bEnd) {
    const std::size_t lo = std::max(aStart, bStart);
    const std::size_t hi = std::min(aEnd, bEnd);
    const std::size_t inter = hi >= lo ? hi - lo + 1 : 0;
    const std::size_t uni = (aEnd - aStart + 1) + (bEnd - bStart + 1) - inter;
    return {inter, uni};
}

// The 95% union-coverage rule, compared in integers so 95/100 is exact.
inline bool trends_match(const Target& a, const ChartFeature& f) {
    const auto c = trend_coverage(a.start, a.end, f.start, f.end);
    return c.intersection * 100 >= c.unionSize * 95;
}

/// For each reference, the position in `features` (sorted by rank) of the
/// best-ranked feature it matches. Points need the identical vertex; trends
/// need >= 95% union coverage. Ungrounded and factually wrong references
/// never match.
inline std::vector<std::optional<std::size_t>> match_features(const std::vector<GroundedReference>& refs,
                                                              const std::vector<ChartFeature>& features) {
    std::vector<std::optional<std::size_t>> out(refs.size());
    for (std::size_t r = 0; r < refs.size(); ++r) {
        const auto& ref = refs[r];
        if (!ref.target || ref.factualError) continue;
        for (std::size_t f = 0; f < features.size(); ++f) {
            const auto& feat = features[f];
            if (feat.kind != ref.target->kind) continue;
            const bool hit = feat.kind == FeatureKind::Point ? feat.start == ref.target->start
                                                             : trends_match(*ref.target, feat);
            if (hit) {
                out[r] = f;
                break;
            }
        }
    }
    return out;
}

} // namespace capcheck
