#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace testing_support;

TEST(TimeSeries, RejectsBadInput) {
    EXPECT_THROW(yearly(2000, {1.0}), InvalidInput);
    EXPECT_THROW(TimeSeries({{ymd(2001), 1}, {ymd(2000), 2}}), InvalidInput);
    EXPECT_THROW(TimeSeries({{ymd(2000), 1}, {ymd(2000), 2}}), InvalidInput);
    EXPECT_THROW(TimeSeries({{ymd(2000), 1}, {ymd(2001), std::numeric_limits<double>::quiet_NaN()}}), InvalidInput);
}

TEST(ChartSpec, RejectsDegenerateRanges) {
    ChartSpec s{640, 480, ymd(2000), ymd(2000), 0, 1};
    EXPECT_THROW(s.validate(), InvalidInput);
    s.tMax = ymd(2001);
    s.yMax = 0;
    EXPECT_THROW(s.validate(), InvalidInput);
    s.yMax = 1;
    s.plotWidth = 0;
    EXPECT_THROW(s.validate(), InvalidInput);
}

TEST(ChartSpec, DefaultSpecPadsFlatSeries) {
    const auto spec = default_spec(yearly(2000, {3, 3, 3}));
    EXPECT_DOUBLE_EQ(spec.yMin, 2);
    EXPECT_DOUBLE_EQ(spec.yMax, 4);
}

TEST(Clip, FullRangeKeepsEverything) {
    const auto s = yearly(1990, {1, 2, 3, 4, 5});
    ChartSpec spec{640, 480, ymd(1990), ymd(1994), 0, 10};
    EXPECT_EQ(clip(s, spec), s);
}

TEST(Clip, NarrowRangeKeepsInside) {
    const auto s = yearly(1990, {1, 2, 3, 4, 5});
    ChartSpec spec{640, 480, ymd(1991), ymd(1993), 0, 10};
    const auto c = clip(s, spec);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].t, ymd(1991));
    EXPECT_EQ(c[2].t, ymd(1993));
}

TEST(Clip, KeepsValuesOutsideYRange) {
    const auto s = yearly(1990, {-100, 2, 300});
    ChartSpec spec{640, 480, ymd(1990), ymd(1992), 0, 10};
    EXPECT_EQ(clip(s, spec).size(), 3u);
}

TEST(Clip, EmptyChart) {
    const auto s = yearly(1990, {1, 2});
    ChartSpec spec{640, 480, ymd(2000), ymd(2010), 0, 10};
    EXPECT_THROW(clip(s, spec), EmptyChart);
    spec = {640, 480, ymd(1990), ymd(1990, 6), 0, 10};
    EXPECT_THROW(clip(s, spec), EmptyChart);
}

TEST(Clip, Idempotent) {
    const auto s = yearly(1990, {1, 5, 2, 8, 3, 9, 4});
    ChartSpec spec{640, 480, ymd(1991, 6), ymd(1995, 2), 0, 10};
    const auto once = clip(s, spec);
    EXPECT_EQ(clip(once, spec), once);
}

TEST(Granularity, CommonCadences) {
    EXPECT_EQ(detect_granularity(monthly(2000, 1, {1, 2, 3, 4, 5})), Granularity::Month);
    EXPECT_EQ(detect_granularity(yearly(2000, {1, 2, 3})), Granularity::Year);
    EXPECT_EQ(detect_granularity(daily(ymd(2000), {1, 2, 3})), Granularity::Day);
    EXPECT_EQ(detect_granularity(TimeSeries({{ymd(2000, 1, 3), 0}, {ymd(2000, 1, 10), 0}, {ymd(2000, 1, 17), 0}})),
              Granularity::Week);
}

TEST(Granularity, IrregularSpacingUsesMedian) {
    // gaps 1d, 2d, 1d -> median 1d
    const TimeSeries s({{ymd(2000, 1, 1), 0}, {ymd(2000, 1, 2), 0}, {ymd(2000, 1, 4), 0}, {ymd(2000, 1, 5), 0}});
    EXPECT_EQ(detect_granularity(s), Granularity::Day);
}

TEST(Granularity, LeapYearsStillYearly) {
    // 365/366-day gaps, and a quarter-month short of a year is not a year
    EXPECT_EQ(detect_granularity(yearly(1999, {1, 2, 3, 4, 5, 6})), Granularity::Year);
    EXPECT_EQ(detect_granularity(TimeSeries({{ymd(2000, 1), 0}, {ymd(2000, 10), 1}, {ymd(2001, 7), 2}})),
              Granularity::Month);
}

TEST(Normalize, SquarePlotDiagonalIsOne) {
    const auto s = yearly(2000, {0, 10});
    ChartSpec spec{500, 500, ymd(2000), ymd(2001), 0, 10};
    const auto p = normalize(s, spec);
    EXPECT_NEAR(p.vertices[0].x, 0, 1e-12);
    EXPECT_NEAR(p.vertices[0].y, 0, 1e-12);
    EXPECT_NEAR(p.vertices[1].x, 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(p.vertices[1].y, 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::hypot(p.vertices[1].x, p.vertices[1].y), 1.0, 1e-12);
}

TEST(Normalize, ThreeFourFive) {
    const auto s = yearly(2000, {0, 300});
    ChartSpec spec{400, 300, ymd(2000), ymd(2001), 0, 300};
    const auto p = normalize(s, spec);
    EXPECT_NEAR(p.vertices[1].x, 0.8, 1e-12);
    EXPECT_NEAR(p.vertices[1].y, 0.6, 1e-12);
}

TEST(Normalize, TimeIsLinearInDays) {
    // 2000 is a leap year: 366 of the 731 days fall before 2001-01-01
    const auto s = yearly(2000, {0, 1, 2});
    ChartSpec spec{100, 100, ymd(2000), ymd(2002), 0, 2};
    const auto p = normalize(s, spec);
    EXPECT_NEAR(p.vertices[1].x / p.vertices[2].x, 366.0 / 731.0, 1e-12);
}

TEST(Normalize, ScaleInvariance) {
    const auto s = yearly(2000, {3, 1, 4, 1, 5, 9, 2, 6});
    const auto spec = default_spec(s, 640, 480);
    auto bigger = spec;
    bigger.plotWidth *= 2.5;
    bigger.plotHeight *= 2.5;
    const auto a = normalize(s, spec), b = normalize(s, bigger);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(a.vertices[i].x, b.vertices[i].x, 1e-12);
        EXPECT_NEAR(a.vertices[i].y, b.vertices[i].y, 1e-12);
    }
}

TEST(Normalize, AffineValueInvariance) {
    const std::vector<double> ys{3, 1, 4, 1, 5, 9, 2, 6};
    std::vector<double> scaled;
    for (double y : ys) scaled.push_back(7 * y - 20);
    const auto s = yearly(2000, ys), t = yearly(2000, scaled);
    ChartSpec a{640, 480, ymd(2000), ymd(2007), 0, 10};
    ChartSpec b{640, 480, ymd(2000), ymd(2007), -20, 50};
    const auto pa = normalize(s, a), pb = normalize(t, b);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        EXPECT_NEAR(pa.vertices[i].x, pb.vertices[i].x, 1e-12);
        EXPECT_NEAR(pa.vertices[i].y, pb.vertices[i].y, 1e-12);
    }
}

TEST(Normalize, VerticesStayWithinUnitDiagonal) {
    const auto s = yearly(2000, {3, 1, 4, 1, 5, 9, 2, 6});
    const auto p = polyline_of(s, 900, 200);
    ASSERT_EQ(p.size(), s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_EQ(p.sourceIndex[i], i);
        if (i > 0) {
            EXPECT_LT(p.vertices[i - 1].x, p.vertices[i].x);
        }
        for (std::size_t j = 0; j < p.size(); ++j)
            EXPECT_LE(std::hypot(p.vertices[i].x - p.vertices[j].x, p.vertices[i].y - p.vertices[j].y), 1.0 + 1e-12);
    }
}

TEST(Dates, IsoRoundTrip) {
    EXPECT_EQ(format_iso(*parse_iso_date("1997-11-03")), "1997-11-03");
    EXPECT_FALSE(parse_iso_date("1997-02-30"));
    EXPECT_FALSE(parse_iso_date("1997-2-03"));
    EXPECT_FALSE(parse_iso_date("19970203"));
    EXPECT_EQ(add_months(ymd(2020, 1, 31), 1), ymd(2020, 2, 29));
}
