#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace capcheck {

// Calendar instants are UTC dates with day resolution.
using Date = std::chrono::sys_days;

// Inclusive range of calendar days.
struct DateRange {
    Date first;
    Date last;

    bool contains(Date d) const noexcept { return first <= d && d <= last; }
    friend bool operator==(const DateRange&, const DateRange&) = default;
};

inline long days_since_epoch(Date d) noexcept {
    return static_cast<long>(d.time_since_epoch().count());
}

inline std::optional<Date> make_date(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

inline Date month_first(int year, unsigned month) {
    return Date{std::chrono::year{year} / std::chrono::month{month} / 1};
}

inline Date month_last(int year, unsigned month) {
    return Date{std::chrono::year{year} / std::chrono::month{month} / std::chrono::last};
}

inline DateRange month_range(int year, unsigned month) {
    return {month_first(year, month), month_last(year, month)};
}

inline DateRange year_range(int year) {
    return {month_first(year, 1), month_last(year, 12)};
}

inline std::chrono::year_month_day ymd_of(Date d) { return std::chrono::year_month_day{d}; }

inline int year_of(Date d) { return static_cast<int>(ymd_of(d).year()); }
inline unsigned month_of(Date d) { return static_cast<unsigned>(ymd_of(d).month()); }
inline unsigned day_of(Date d) { return static_cast<unsigned>(ymd_of(d).day()); }

// Calendar month arithmetic; the day is clamped to the target month's length.
inline Date add_months(Date d, int months) {
    const auto ymd = ymd_of(d);
    const auto shifted = ymd.year() / ymd.month() / 1 + std::chrono::months{months};
    const auto last = std::chrono::year_month_day_last{shifted.year(), std::chrono::month_day_last{shifted.month()}};
    const auto day = std::min(ymd.day(), last.day());
    return Date{shifted.year() / shifted.month() / day};
}

// Strict `YYYY-MM-DD`.
inline std::optional<Date> parse_iso_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int parts[3] = {0, 0, 0};
    const std::size_t starts[3] = {0, 5, 8};
    const std::size_t lengths[3] = {4, 2, 2};
    for (int p = 0; p < 3; ++p) {
        for (std::size_t i = 0; i < lengths[p]; ++i) {
            const char c = text[starts[p] + i];
            if (c < '0' || c > '9') return std::nullopt;
            parts[p] = parts[p] * 10 + (c - '0');
        }
    }
    return make_date(parts[0], static_cast<unsigned>(parts[1]), static_cast<unsigned>(parts[2]));
}

inline std::string format_iso(Date d) {
    const auto ymd = ymd_of(d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace capcheck
