#pragma once

// JSON wire formats for features and check results.

#include "capcheck/check.hpp"
#include "capcheck/ingest.hpp"

#include <json.hpp>

namespace capcheck {

inline nlohmann::json span_json(ByteSpan s) { return nlohmann::json::array({s.begin, s.end}); }

inline nlohmann::json feature_json(const ChartFeature& f, const TimeSeries& series) {
    nlohmann::json j{{"kind", to_string(f.kind)}, {"rank", f.rank}, {"persistence", f.persistence.value()}};
    if (f.kind == FeatureKind::Point) {
        j["index"] = f.start;
        j["date"] = format_iso(series[f.start].t);
        j["extremeKind"] = to_string(f.extremeKind);
    } else {
        j["start"] = f.start;
        j["end"] = f.end;
        j["startDate"] = format_iso(series[f.start].t);
        j["endDate"] = format_iso(series[f.end].t);
        j["direction"] = to_string(f.direction);
    }
    return j;
}

/// `{"features": [...]}` for a clipped series and its ranked features.
inline nlohmann::json features_json(const std::vector<ChartFeature>& features, const TimeSeries& clipped) {
    auto arr = nlohmann::json::array();
    for (const auto& f : features) arr.push_back(feature_json(f, clipped));
    return {{"features", arr}};
}

inline nlohmann::json target_json(const std::optional<Target>& t, const TimeSeries& series) {
    if (!t) return nullptr;
    if (t->kind == FeatureKind::Point)
        return {{"kind", "point"}, {"index", t->start}, {"date", format_iso(series[t->start].t)}};
    return {{"kind", "trend"},
            {"start", t->start},
            {"end", t->end},
            {"startDate", format_iso(series[t->start].t)},
            {"endDate", format_iso(series[t->end].t)}};
}

inline nlohmann::json time_ref_json(const TimeReference& t) {
    nlohmann::json j{{"span", span_json(t.span)}, {"role", to_string(t.role)}, {"granularity", to_string(t.granularity)}};
    j["start"] = t.resolved_start() ? nlohmann::json(format_iso(*t.resolved_start())) : nlohmann::json(nullptr);
    j["end"] = t.resolved_end() ? nlohmann::json(format_iso(*t.resolved_end())) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json check_result_json(const CheckResult& r) {
    nlohmann::json features = nlohmann::json::array();
    for (const auto& fs : r.features) {
        auto j = feature_json(fs.feature, r.series);
        j["matched"] = fs.matched;
        features.push_back(std::move(j));
    }

    nlohmann::json references = nlohmann::json::array();
    for (const auto& rr : r.references) {
        const auto& pair = rr.ref.pair;
        nlohmann::json times = nlohmann::json::array();
        nlohmann::json timeSpans = nlohmann::json::array();
        for (const auto& t : pair.times) {
            times.push_back(time_ref_json(t));
            timeSpans.push_back(span_json(t.span));
        }
        references.push_back({{"span", span_json(pair.description.span)},
                              {"timeSpans", timeSpans},
                              {"times", times},
                              {"kind", to_string(pair.description.kind)},
                              {"keyword", pair.description.matchedKeyword},
                              {"similarity", pair.description.similarity},
                              {"sentence", rr.sentence},
                              {"status", to_string(rr.ref.status)},
                              {"target", target_json(rr.ref.target, r.series)},
                              {"factualError", rr.ref.factualError},
                              {"matchedRank", rr.matchedRank ? nlohmann::json(*rr.matchedRank) : nlohmann::json(nullptr)},
                              {"palette", rr.palette}});
    }

    nlohmann::json diagnostics = nlohmann::json::array();
    for (const auto& d : r.diagnostics) {
        nlohmann::json spans = nlohmann::json::array();
        for (const auto& s : d.spans) spans.push_back(span_json(s));
        diagnostics.push_back(
            {{"kind", to_string(d.kind)}, {"spans", spans}, {"message", d.message}, {"sentence", d.sentence}});
    }

    return {{"features", features},
            {"references", references},
            {"diagnostics", diagnostics},
            {"granularity", to_string(r.granularity)},
            {"spec", spec_to_json(r.spec)}};
}

} // namespace capcheck
