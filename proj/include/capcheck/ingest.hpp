#pragma once

// Series and chart-spec ingestion from CSV and JSON.

#include "capcheck/chart_model.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace capcheck {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\"";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

} // namespace detail

/// Two-column CSV: `YYYY-MM-DD,value`. A header row is accepted only as the
/// first non-blank line and is recognized by a first field that is not a date.
inline TimeSeries parse_series_csv(std::string_view text, std::string name = {}) {
    std::vector<Sample> points;
    bool seenRow = false;
    std::size_t row = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++row;
        if (detail::trim(line).empty()) continue;

        const auto comma = line.find(',');
        const auto dateField = detail::trim(line.substr(0, comma));
        const auto date = parse_iso_date(dateField);
        if (!seenRow && !date) {
            seenRow = true;  // header
            continue;
        }
        seenRow = true;
        if (!date) throw ParseError("invalid date '" + std::string(dateField) + "', expected YYYY-MM-DD", row, 1);
        if (comma == std::string_view::npos) throw ParseError("missing value column", row, 2);
        auto rest = line.substr(comma + 1);
        if (rest.find(',') != std::string_view::npos) throw ParseError("expected exactly 2 columns", row, 3);
        double y = 0;
        if (!detail::parse_double(detail::trim(rest), y))
            throw ParseError("invalid value '" + std::string(detail::trim(rest)) + "'", row, 2);
        if (!points.empty() && !(points.back().t < *date))
            throw ParseError("timestamps must be strictly increasing", row, 1);
        points.push_back({*date, y});
    }
    if (points.size() < 2) throw ParseError("series needs at least 2 data rows");
    return TimeSeries(std::move(points), std::move(name));
}

/// `{"points": [{"t": "YYYY-MM-DD", "y": number}], "name": "..."}`.
inline TimeSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("series JSON needs a \"points\" array");
    std::vector<Sample> points;
    std::size_t row = 0;
    for (const auto& p : j["points"]) {
        ++row;
        if (!p.is_object() || !p.contains("t") || !p.contains("y") || !p["t"].is_string() || !p["y"].is_number())
            throw ParseError("point needs string \"t\" and numeric \"y\"", row);
        const auto date = parse_iso_date(p["t"].get<std::string>());
        if (!date) throw ParseError("invalid date '" + p["t"].get<std::string>() + "'", row, 1);
        const double y = p["y"].get<double>();
        if (!std::isfinite(y)) throw ParseError("non-finite value", row, 2);
        if (!points.empty() && !(points.back().t < *date))
            throw ParseError("timestamps must be strictly increasing", row, 1);
        points.push_back({*date, y});
    }
    if (points.size() < 2) throw ParseError("series needs at least 2 points");
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    return TimeSeries(std::move(points), std::move(name));
}

inline TimeSeries parse_series_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return series_from_json(j);
}

/// Dispatches on the first non-blank character: '{' means JSON.
inline TimeSeries parse_series(std::string_view text) {
    const auto t = detail::trim(text);
    if (!t.empty() && t.front() == '{') return parse_series_json(text);
    return parse_series_csv(text);
}

inline TimeSeries load_series(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str());
}

/// `{"plotWidth": n, "plotHeight": n, "xRange": ["..",".."], "yRange": [n, n]}`.
/// Missing keys fall back to `fallback`.
inline ChartSpec spec_from_json(const nlohmann::json& j, const ChartSpec& fallback) {
    if (!j.is_object()) throw ParseError("chart spec must be a JSON object");
    ChartSpec spec = fallback;
    try {
        if (j.contains("plotWidth")) spec.plotWidth = j.at("plotWidth").get<double>();
        if (j.contains("plotHeight")) spec.plotHeight = j.at("plotHeight").get<double>();
        if (j.contains("xRange")) {
            const auto& xr = j.at("xRange");
            if (!xr.is_array() || xr.size() != 2) throw ParseError("xRange must be a 2-element array");
            const auto lo = parse_iso_date(xr[0].get<std::string>());
            const auto hi = parse_iso_date(xr[1].get<std::string>());
            if (!lo || !hi) throw ParseError("xRange dates must be YYYY-MM-DD");
            spec.tMin = *lo;
            spec.tMax = *hi;
        }
        if (j.contains("yRange")) {
            const auto& yr = j.at("yRange");
            if (!yr.is_array() || yr.size() != 2) throw ParseError("yRange must be a 2-element array");
            spec.yMin = yr[0].get<double>();
            spec.yMax = yr[1].get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("chart spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

inline nlohmann::json spec_to_json(const ChartSpec& spec) {
    return {{"plotWidth", spec.plotWidth},
            {"plotHeight", spec.plotHeight},
            {"xRange", {format_iso(spec.tMin), format_iso(spec.tMax)}},
            {"yRange", {spec.yMin, spec.yMax}}};
}

} // namespace capcheck
