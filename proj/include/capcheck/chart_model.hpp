#pragma once

// Time-series and chart geometry model: the series under analysis, the plot
// it is drawn into, and the diagonal-normalized coordinates every prominence
// computation works in.

#include "capcheck/date.hpp"
#include "capcheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace capcheck {

struct Sample {
    Date t;
    double y;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// An ordered univariate series. The constructor enforces strictly increasing
/// timestamps, at least two samples and finite values.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<Sample> points, std::string name = {})
        : points_(std::move(points)), name_(std::move(name)) {
        if (points_.size() < 2) throw InvalidInput("time series needs at least 2 points");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!std::isfinite(points_[i].y))
                throw InvalidInput("non-finite value at point " + std::to_string(i));
            if (i > 0 && !(points_[i - 1].t < points_[i].t))
                throw InvalidInput("timestamps not strictly increasing at point " + std::to_string(i) +
                                   " (" + format_iso(points_[i].t) + ")");
        }
    }

    const std::vector<Sample>& points() const noexcept { return points_; }
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Sample& operator[](std::size_t i) const { return points_[i]; }
    Date first_date() const { return points_.front().t; }
    Date last_date() const { return points_.back().t; }

    std::pair<double, double> value_extent() const {
        const auto [lo, hi] = std::minmax_element(points_.begin(), points_.end(),
                                                  [](const Sample& a, const Sample& b) { return a.y < b.y; });
        return {lo->y, hi->y};
    }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<Sample> points_;
    std::string name_;
};

/// Plot size in device-independent pixels plus the visible axis ranges.
struct ChartSpec {
    double plotWidth = 640;
    double plotHeight = 480;
    Date tMin;
    Date tMax;
    double yMin = 0;
    double yMax = 1;

    void validate() const {
        if (!(plotWidth > 0) || !(plotHeight > 0) || !std::isfinite(plotWidth) || !std::isfinite(plotHeight))
            throw InvalidInput("plot dimensions must be positive");
        if (!(tMin < tMax)) throw InvalidInput("xRange must satisfy tMin < tMax");
        if (!(yMin < yMax) || !std::isfinite(yMin) || !std::isfinite(yMax))
            throw InvalidInput("yRange must satisfy yMin < yMax");
    }

    double diagonal() const { return std::hypot(plotWidth, plotHeight); }

    friend bool operator==(const ChartSpec&, const ChartSpec&) = default;
};

/// Spec covering the full extent of the data. A flat series gets a unit band
/// around its value so the y range stays non-degenerate.
inline ChartSpec default_spec(const TimeSeries& series, double width = 640, double height = 480) {
    auto [lo, hi] = series.value_extent();
    if (!(lo < hi)) {
        lo -= 1.0;
        hi += 1.0;
    }
    ChartSpec spec{width, height, series.first_date(), series.last_date(), lo, hi};
    spec.validate();
    return spec;
}

enum class Granularity { Day, Week, Month, Year };

inline std::string_view to_string(Granularity g) {
    switch (g) {
    case Granularity::Day: return "day";
    case Granularity::Week: return "week";
    case Granularity::Month: return "month";
    case Granularity::Year: return "year";
    }
    return "day";
}

inline double nominal_days(Granularity g) {
    switch (g) {
    case Granularity::Day: return 1;
    case Granularity::Week: return 7;
    case Granularity::Month: return 28;
    case Granularity::Year: return 365;
    }
    return 1;
}

/// Points with t inside [tMin, tMax], in order. Values outside the y range are
/// kept; vertical clipping only affects rendering.
inline TimeSeries clip(const TimeSeries& series, const ChartSpec& spec) {
    std::vector<Sample> kept;
    for (const auto& p : series.points())
        if (spec.tMin <= p.t && p.t <= spec.tMax) kept.push_back(p);
    if (kept.size() < 2) throw EmptyChart();
    return TimeSeries(std::move(kept), series.name());
}

/// Coarsest unit whose nominal length is at most the median spacing / 0.9.
inline Granularity detect_granularity(const TimeSeries& series) {
    std::vector<double> gaps;
    gaps.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i)
        gaps.push_back(static_cast<double>(days_since_epoch(series[i].t) - days_since_epoch(series[i - 1].t)));
    std::sort(gaps.begin(), gaps.end());
    const std::size_t n = gaps.size();
    const double median = n % 2 == 1 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);

    for (Granularity g : {Granularity::Year, Granularity::Month, Granularity::Week})
        if (median >= 0.9 * nominal_days(g)) return g;
    return Granularity::Day;
}

struct Vertex {
    double x;
    double y;
};

/// Chart-space polyline in which the plot diagonal has length 1.
struct NormalizedPolyline {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> sourceIndex;

    std::size_t size() const noexcept { return vertices.size(); }
};

/// Maps a clipped series into diagonal-normalized plot coordinates.
inline NormalizedPolyline normalize(const TimeSeries& series, const ChartSpec& spec) {
    spec.validate();
    const double diag = spec.diagonal();
    const double t0 = static_cast<double>(days_since_epoch(spec.tMin));
    const double tSpan = static_cast<double>(days_since_epoch(spec.tMax)) - t0;
    const double ySpan = spec.yMax - spec.yMin;
    const double xScale = spec.plotWidth / diag;
    const double yScale = spec.plotHeight / diag;

    NormalizedPolyline out;
    out.vertices.reserve(series.size());
    out.sourceIndex.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& p = series[i];
        const double tx = (static_cast<double>(days_since_epoch(p.t)) - t0) / tSpan;
        const double vy = (p.y - spec.yMin) / ySpan;
        out.vertices.push_back({tx * xScale, vy * yScale});
        out.sourceIndex.push_back(i);
    }
    return out;
}

} // namespace capcheck
