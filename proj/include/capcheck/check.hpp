#pragma once

// The full chart/caption consistency check.

#include "capcheck/caption.hpp"
#include "capcheck/chart_model.hpp"
#include "capcheck/grounding.hpp"
#include "capcheck/prominence.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace capcheck {

enum class DiagnosticKind { FactualError, EmphasisMismatch };

inline std::string_view to_string(DiagnosticKind k) {
    return k == DiagnosticKind::FactualError ? "factual" : "mismatch";
}

struct Diagnostic {
    DiagnosticKind kind;
    std::vector<ByteSpan> spans;  // sorted
    std::string message;
    std::size_t sentence = 0;

    ByteSpan extent() const { return {spans.front().begin, spans.back().end}; }
};

struct FeatureStatus {
    ChartFeature feature;
    bool matched = false;
};

struct ReferenceResult {
    GroundedReference ref;
    std::size_t sentence = 0;
    int palette = 0;                  // reading order, cycling over 4 colors
    std::optional<int> matchedRank;  // rank of the matched feature
};

struct CheckResult {
    TimeSeries series;  // clipped to the x range
    ChartSpec spec;
    Granularity granularity = Granularity::Day;
    std::vector<FeatureStatus> features;
    std::vector<ReferenceResult> references;
    std::vector<Diagnostic> diagnostics;  // caption byte order
};

inline constexpr int kPaletteSize = 4;

namespace detail {

inline std::string quote(std::string_view caption, ByteSpan s) {
    return "'" + std::string(caption.substr(s.begin, s.size())) + "'";
}

inline std::string describe_point(const TimeSeries& series, std::size_t i) {
    std::ostringstream os;
    os << series[i].y << " on " << format_iso(series[i].t);
    return os.str();
}

inline std::string diagnostic_message(const GroundedReference& ref, const TimeSeries& series, std::string_view caption,
                                      const ChartSpec& spec) {
    const auto word = quote(caption, ref.pair.description.span);
    switch (ref.status) {
    case GroundStatus::OutOfChart:
        return word + ": the referenced time lies outside the chart's time range (" + format_iso(spec.tMin) + " to " +
               format_iso(spec.tMax) + ")";
    case GroundStatus::TooNarrow:
        return word + ": the referenced time range holds too few chart points to form a trend";
    case GroundStatus::Grounded: break;
    }
    const auto& t = *ref.target;
    if (ref.factualError) {
        const bool rise = ref.pair.description.kind == DescriptionKind::Rise;
        return word + " describes a " + (rise ? "rise" : "fall") + ", but the value goes from " +
               describe_point(series, t.start) + " to " + describe_point(series, t.end);
    }
    if (t.kind == FeatureKind::Point)
        return word + " refers to the point at " + format_iso(series[t.start].t) +
               ", which is not among the top 5 prominent features";
    return word + " refers to the trend from " + format_iso(series[t.start].t) + " to " + format_iso(series[t.end].t) +
           ", which is not among the top 5 prominent features";
}

} // namespace detail

/// clip -> normalize -> persistence -> top features, then per sentence:
/// extract -> pair -> ground -> factual check, and finally feature matching.
/// Throws EmptyChart when fewer than two points fall inside the x range.
inline CheckResult check(const TimeSeries& series, const ChartSpec& spec, std::string_view caption,
                         const CaptionAnalyzer& analyzer) {
    spec.validate();
    auto clipped = clip(series, spec);
    const auto polyline = normalize(clipped, spec);
    const auto features = enumerate_features(polyline, point_persistence(polyline));
    const auto granularity = detect_granularity(clipped);
    const auto analysis = analyzer.analyze(caption, granularity, {spec.tMin, spec.tMax});

    std::vector<GroundedReference> refs;
    std::vector<std::size_t> sentenceOf;
    for (const auto& sentence : analysis.sentences) {
        for (const auto& pair : sentence.pairs) {
            auto g = ground(pair, clipped);
            g.factualError = check_factual(g, clipped);
            refs.push_back(std::move(g));
            sentenceOf.push_back(sentence.index);
        }
    }
    const auto matches = match_features(refs, features);

    CheckResult result{std::move(clipped), spec, granularity, {}, {}, {}};
    for (const auto& f : features) result.features.push_back({f, false});

    std::vector<std::size_t> order(refs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return refs[a].pair.spans().front().begin < refs[b].pair.spans().front().begin;
    });

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t i = order[pos];
        ReferenceResult rr{refs[i], sentenceOf[i], static_cast<int>(pos % kPaletteSize), std::nullopt};
        if (matches[i]) {
            result.features[*matches[i]].matched = true;
            rr.matchedRank = result.features[*matches[i]].feature.rank;
        }
        const auto& ref = refs[i];
        if (ref.factualError || !matches[i]) {
            result.diagnostics.push_back(
                {ref.factualError ? DiagnosticKind::FactualError : DiagnosticKind::EmphasisMismatch,
                 ref.pair.spans(), detail::diagnostic_message(ref, result.series, caption, spec), sentenceOf[i]});
        }
        result.references.push_back(std::move(rr));
    }
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.spans.front() < b.spans.front(); });
    return result;
}

inline CheckResult check(const TimeSeries& series, const ChartSpec& spec, std::string_view caption,
                         const Lexicon& lexicon, std::shared_ptr<const SimilarityProvider> similarity = nullptr,
                         double threshold = kDefaultSimilarityThreshold) {
    return check(series, spec, caption, CaptionAnalyzer(lexicon, std::move(similarity), threshold));
}

inline bool has_factual_errors(const CheckResult& r) {
    return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                       [](const Diagnostic& d) { return d.kind == DiagnosticKind::FactualError; });
}

} // namespace capcheck
