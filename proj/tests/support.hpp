#pragma once

#include "capcheck/capcheck.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace capcheck;

inline Date ymd(int y, unsigned m = 1, unsigned d = 1) { return *make_date(y, m, d); }

inline TimeSeries yearly(int firstYear, const std::vector<double>& values) {
    std::vector<Sample> pts;
    for (std::size_t i = 0; i < values.size(); ++i) pts.push_back({ymd(firstYear + static_cast<int>(i)), values[i]});
    return TimeSeries(std::move(pts));
}

inline TimeSeries monthly(int firstYear, unsigned firstMonth, const std::vector<double>& values) {
    std::vector<Sample> pts;
    const Date start = month_first(firstYear, firstMonth);
    for (std::size_t i = 0; i < values.size(); ++i) pts.push_back({add_months(start, static_cast<int>(i)), values[i]});
    return TimeSeries(std::move(pts));
}

inline TimeSeries daily(Date first, const std::vector<double>& values) {
    std::vector<Sample> pts;
    for (std::size_t i = 0; i < values.size(); ++i) pts.push_back({first + std::chrono::days(i), values[i]});
    return TimeSeries(std::move(pts));
}

/// Random-walk daily series with irregular gaps; seeds are fixed per test.
inline TimeSeries random_series(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> gap(1, 3);
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<Sample> pts;
    Date t = ymd(2000);
    double y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back({t, y});
        t += std::chrono::days(gap(rng));
        y += step(rng);
    }
    return TimeSeries(std::move(pts));
}

inline NormalizedPolyline polyline_of(const TimeSeries& s, double w = 640, double h = 480) {
    return normalize(s, default_spec(s, w, h));
}

inline NormalizedPolyline polyline_of(std::vector<Vertex> v) {
    NormalizedPolyline p;
    for (std::size_t i = 0; i < v.size(); ++i) p.sourceIndex.push_back(i);
    p.vertices = std::move(v);
    return p;
}

/// Yearly 1971-2020 rates: rise to a 1981 peak, straight fall to a 1987
/// trough, then a slow decline with a small 2008-2012 slide.
inline TimeSeries mortgage_like() {
    std::vector<double> v = {7.5, 7.4, 8.0, 9.2, 10.4, 8.9, 8.6, 9.6, 11.2, 13.7, 16.6};
    for (int i = 1; i <= 6; ++i) v.push_back(16.6 - 8.1 * i / 6);
    for (double y : {10.3, 10.3, 10.1, 9.25, 8.4, 7.9, 8.4, 7.9, 7.8, 7.6, 6.9, 7.4, 8.1, 7.0, 6.5, 5.8, 5.8,
                     5.9,  6.4,  6.3,  6.0,  5.0, 4.7, 4.5, 3.7, 4.0, 4.2, 3.9, 3.6, 4.0, 4.5, 3.9, 3.1})
        v.push_back(y);
    return yearly(1971, v);
}

inline const char* kMortgageCaption =
    "The 30-year fixed mortgage rates soared from 1980 to 1991. Rates peaked in 1981 and then declined sharply "
    "until 1987. Since then they drifted lower, with a dip between 2008 and 2012.";

} // namespace testing_support
