// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"
#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

std::filesystem::path fs_root() { return CAPCHECK_SOURCE_DIR; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

TimeSeries uniform_series(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::vector<double> v(n);
    for (auto& x : v) x = value(rng);
    return daily(ymd(2000), v);
}

Outcome rdp_nesting() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> len(3, 256);
    const auto t0 = Clock::now();
    long violations = 0;
    for (int s = 0; s < 200; ++s) {
        const auto poly = polyline_of(uniform_series(rng, len(rng)));
        auto prev = rdp_retained(poly, EpsilonGrid::value(0));
        for (int k = 1; k < EpsilonGrid::kLevels; ++k) {
            const auto cur = rdp_retained(poly, EpsilonGrid::value(k));
            if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end())) ++violations;
            prev = cur;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << violations << " violations, " << secs << " s";
    return {violations == 0 && secs < 10, os.str()};
}

Outcome persistence_oracle() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> len(2, 64);
    const auto t0 = Clock::now();
    long mismatches = 0, points = 0;
    for (int s = 0; s < 100; ++s) {
        const auto poly = polyline_of(uniform_series(rng, len(rng)));
        const auto prof = point_persistence(poly);
        const auto expected = oracle::persistence_levels(poly);
        for (std::size_t i = 0; i < poly.vertices.size(); ++i, ++points)
            if (prof.perPoint[i].level() != expected[i]) ++mismatches;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << mismatches << " of " << points << " points differ, " << secs << " s";
    return {mismatches == 0 && secs < 10, os.str()};
}

Outcome trend_formula() {
    const double cosT = 0.7 / std::hypot(0.7, 0.5);
    const double yA = 0.4 * 0.5 / 0.7 - 0.105 / cosT;
    const std::vector<std::vector<Vertex>> shapes = {
        {{0, 0}, {0.8, 0.6}},
        {{0, 0.3}, {0.2, 0.3}, {0.4, 0.3}, {0.6, 0.3}, {0.8, 0.3}},
        {{0, 0}, {0.5, 0.4}, {1, 0}},
        {{0, 0}, {0.4, yA}, {0.55, (yA + 0.5) / 2}, {0.7, 0.5}},
        {{0, 0}, {0.1, 0.3}, {0.2, 0.05}, {0.3, 0.2}, {0.4, 0.1}, {0.5, 0.45}, {0.6, 0.0}, {0.7, 0.12}},
        {{0, 0.1}, {0.15, 0.12}, {0.3, 0.4}, {0.45, 0.38}, {0.6, 0.1}, {0.75, 0.11}},
    };
    long checked = 0, wrong = 0;
    for (const auto& shape : shapes) {
        const auto poly = polyline_of(shape);
        const auto levels = oracle::persistence_levels(poly);
        const auto prof = point_persistence(poly);
        for (std::size_t i = 0; i < shape.size(); ++i)
            for (std::size_t j = i + 1; j < shape.size(); ++j) {
                int interior = 0;
                for (std::size_t m = i + 1; m < j; ++m) interior = std::max(interior, levels[m]);
                const int expected = std::clamp(std::min(levels[i], levels[j]) - interior + 1, 0, EpsilonGrid::kMaxLevel);
                ++checked;
                if (trend_persistence(prof, i, j).level() != expected) ++wrong;
            }
    }
    // two points: the cap; flat interior: capped endpoints, zero interior
    const auto two = point_persistence(polyline_of(shapes[0]));
    const auto flat = point_persistence(polyline_of(shapes[1]));
    bool special = trend_persistence(two, 0, 1).value() == 0.25 && flat.perPoint.front() == Persistence::cap() &&
                   flat.perPoint.back() == Persistence::cap() && trend_persistence(flat, 0, 4).value() == 0.25;
    for (std::size_t m = 1; m + 1 < flat.size(); ++m) special = special && flat.perPoint[m].level() == 0;
    // A at 0.10, interior M at 0, B capped: 0.10 - 0 + 0.01
    const auto fig = point_persistence(polyline_of(shapes[3]));
    special = special && fig.perPoint[1].level() == 10 && trend_persistence(fig, 1, 3).value() == 0.11;

    std::ostringstream os;
    os << checked << " pairs, " << wrong << " wrong, special cases " << (special ? "ok" : "wrong");
    return {wrong == 0 && special, os.str()};
}

std::string ranking_of(const TimeSeries& s, const ChartSpec& spec) {
    return features_json(detect_features(s, spec), clip(s, spec)).dump();
}

Outcome geometry_invariance() {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> len(3, 200);
    long differ = 0, cases = 0;
    for (int t = 0; t < 50; ++t) {
        const auto s = uniform_series(rng, len(rng));
        const auto spec = default_spec(s);
        const auto base = ranking_of(s, spec);
        for (double factor : {2.0, 0.5, 10.0, 1000.0}) {
            std::vector<Sample> scaled;
            for (const auto& p : s.points()) scaled.push_back({p.t, p.y * factor});
            auto sspec = spec;
            sspec.yMin *= factor;
            sspec.yMax *= factor;
            ++cases;
            if (ranking_of(TimeSeries(scaled), sspec) != base) ++differ;
        }
        for (double factor : {2.0, 0.5, 4.0}) {
            auto dspec = spec;
            dspec.plotWidth *= factor;
            dspec.plotHeight *= factor;
            ++cases;
            if (ranking_of(s, dspec) != base) ++differ;
        }
    }
    std::ostringstream os;
    os << differ << " of " << cases << " rescaled charts changed ranking";
    return {differ == 0, os.str()};
}

Outcome sentence_extraction() {
    const auto report = evaluate(load_corpus(fs_root() / "corpus" / "captions"), CaptionAnalyzer());
    const CaptionAnalyzer analyzer;
    const DateRange range{ymd(1900), ymd(2020, 12, 31)};

    auto only = [&](std::string_view text, Granularity g) { return analyzer.analyze(text, g, range).sentences.at(0); };

    bool named = true;
    auto nk = only("From 1950, North Korea's GDP increased quite rapidly until 1985,", Granularity::Year);
    named = named && nk.pairs.size() == 1 && nk.pairs[0].description.kind == DescriptionKind::Rise &&
            nk.pairs[0].combined_start() == ymd(1950) && nk.pairs[0].combined_end() == ymd(1985, 12, 31);

    auto mort = only("The 30-year fixed mortgage rates peaked in 1981 and then declined sharply until 1987",
                     Granularity::Year);
    named = named && mort.timeRefs.size() == 2 && mort.pairs.size() == 2 &&
            mort.pairs[0].description.kind == DescriptionKind::LocalMax &&
            mort.pairs[0].combined_start() == ymd(1981) && mort.pairs[1].description.kind == DescriptionKind::Fall &&
            !mort.pairs[1].combined_start() && mort.pairs[1].combined_end() == ymd(1987, 12, 31);

    auto nov = only("The index soared since Nov 1997.", Granularity::Month);
    named = named && nov.pairs.size() == 1 && nov.pairs[0].combined_start() == ymd(1997, 11, 1) &&
            !nov.pairs[0].combined_end();

    std::ostringstream os;
    os << report.tally.correct << "/" << report.tally.sentences << " corpus sentences correct, named sentences "
       << (named ? "ok" : "wrong");
    return {named && report.tally.sentences >= 30 && report.tally.correct == report.tally.sentences, os.str()};
}

Outcome figure_one_analog() {
    const auto s = mortgage_like();
    const std::string caption = kMortgageCaption;
    const auto r = check(s, default_spec(s), caption, CaptionAnalyzer());
    int factual = 0, mismatch = 0;
    std::string flagged;
    for (const auto& d : r.diagnostics) {
        (d.kind == DiagnosticKind::FactualError ? factual : mismatch) += 1;
        const auto e = d.extent();
        flagged += " [" + caption.substr(e.begin, e.size()) + "]";
    }
    std::optional<int> peakRank, fallRank;
    for (const auto& ref : r.references) {
        if (ref.ref.pair.description.kind == DescriptionKind::LocalMax) peakRank = ref.matchedRank;
        if (ref.ref.pair.description.kind == DescriptionKind::Fall && !ref.ref.factualError && ref.matchedRank)
            fallRank = ref.matchedRank;
    }
    std::ostringstream os;
    os << factual << " factual, " << mismatch << " mismatch," << flagged << "; peak rank "
       << (peakRank ? std::to_string(*peakRank) : "-") << ", fall rank " << (fallRank ? std::to_string(*fallRank) : "-");
    return {factual == 1 && mismatch == 1 && peakRank == 1 && fallRank == 2, os.str()};
}

Outcome coverage_boundary() {
    ChartFeature f;
    f.kind = FeatureKind::Trend;
    f.start = 0;
    f.end = 99;
    const bool at95 = trends_match({FeatureKind::Trend, 0, 94}, f);
    const bool at94 = trends_match({FeatureKind::Trend, 0, 93}, f);
    f.end = 999;
    const bool at949 = trends_match({FeatureKind::Trend, 0, 948}, f);
    const bool at950 = trends_match({FeatureKind::Trend, 0, 949}, f);
    std::ostringstream os;
    os << "95/100 " << (at95 ? "match" : "no match") << ", 94/100 " << (at94 ? "match" : "no match") << ", 949/1000 "
       << (at949 ? "match" : "no match") << ", 950/1000 " << (at950 ? "match" : "no match");
    return {at95 && !at94 && !at949 && at950, os.str()};
}

Outcome latency() {
    std::mt19937 rng(11);
    std::normal_distribution<double> step(0, 1);
    std::vector<double> v(1000);
    double y = 100;
    for (auto& x : v) x = (y += step(rng));
    const auto s = daily(ymd(2018), v);
    const std::string caption =
        "The index peaked in March 2019 and then declined sharply until June 2019. Prices rose from January 2018 to "
        "May 2018. A dip between August 2019 and October 2019 followed. It hit a low on 3 February 2020. Since "
        "April 2020 values have climbed.";
    const CaptionAnalyzer analyzer;
    const auto t0 = Clock::now();
    const auto r = check(s, default_spec(s), caption, analyzer);
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << secs * 1000 << " ms for " << s.size() << " points, " << split_sentences(caption).size() << " sentences, "
       << r.references.size() << " references";
    return {secs < 1.0 && split_sentences(caption).size() == 5 && r.references.size() >= 5, os.str()};
}

Outcome cli_eval() {
    const std::string cmd = std::string(CAPCHECK_CLI) + " eval --json " + (fs_root() / "corpus").string() + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {false, "cannot run CLI"};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "CLI failed: " + out};

    const auto j = nlohmann::json::parse(out, nullptr, false);
    if (j.is_discarded()) return {false, "unparseable CLI output"};
    const auto sentences = j["sentences"].get<long>(), correct = j["correct"].get<long>();
    const auto fn = j["fn"].get<long>(), fp = j["fp"].get<long>(), im = j["im"].get<long>();

    // recount from per-sentence outcomes to confirm the double counting
    const auto report = evaluate(load_corpus(fs_root() / "corpus"), CaptionAnalyzer());
    long erroneous = 0, multi = 0;
    for (const auto& o : report.sentences) {
        erroneous += !o.correct();
        multi += (o.fn > 0) + (o.fp > 0) + (o.im > 0) > 1;
    }
    const bool consistent = sentences == static_cast<long>(report.tally.sentences) && correct + erroneous == sentences &&
                            fn + fp + im == erroneous + multi && fn == static_cast<long>(report.tally.fn) &&
                            fp == static_cast<long>(report.tally.fp) && im == static_cast<long>(report.tally.im);
    std::ostringstream os;
    os << "sentences " << sentences << ", correct " << correct << ", FN " << fn << ", FP " << fp << ", IM " << im << "; "
       << multi << " sentence(s) in several categories";
    return {consistent && multi >= 1, os.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"rdp-nesting", rdp_nesting},
        {"persistence-oracle", persistence_oracle},
        {"trend-formula", trend_formula},
        {"geometry-invariance", geometry_invariance},
        {"sentence-extraction", sentence_extraction},
        {"caption-scenario", figure_one_analog},
        {"coverage-boundary", coverage_boundary},
        {"latency", latency},
        {"cli-eval-tallies", cli_eval},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
