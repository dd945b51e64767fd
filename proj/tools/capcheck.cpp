// capcheck: batch front end.
//
//   capcheck features data.csv [--width W --height H --xmin D --xmax D --ymin Y --ymax Y]
//   capcheck lint data.csv caption.txt [--strict] [--json]
//   capcheck eval corpus/ [--json]
//
// Exit status: 0 clean (lint may still print mismatch warnings), 1 factual
// error (or any diagnostic under --strict), 2 bad input.

#include "capcheck/capcheck.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct SpecFlags {
    std::optional<double> width, height, ymin, ymax;
    std::optional<std::string> xmin, xmax;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--width", width, "plot width in pixels");
        cmd->add_option("--height", height, "plot height in pixels");
        cmd->add_option("--xmin", xmin, "first date shown (YYYY-MM-DD)");
        cmd->add_option("--xmax", xmax, "last date shown (YYYY-MM-DD)");
        cmd->add_option("--ymin", ymin, "bottom of the value axis");
        cmd->add_option("--ymax", ymax, "top of the value axis");
    }

    capcheck::ChartSpec resolve(const capcheck::TimeSeries& series) const {
        auto spec = capcheck::default_spec(series, width.value_or(640), height.value_or(480));
        auto date = [](const std::string& s, const char* flag) {
            const auto d = capcheck::parse_iso_date(s);
            if (!d) throw capcheck::InvalidInput(std::string(flag) + " expects YYYY-MM-DD, got '" + s + "'");
            return *d;
        };
        if (xmin) spec.tMin = date(*xmin, "--xmin");
        if (xmax) spec.tMax = date(*xmax, "--xmax");
        if (ymin) spec.yMin = *ymin;
        if (ymax) spec.yMax = *ymax;
        spec.validate();
        return spec;
    }
};

struct AnalyzerFlags {
    std::string lexicon, vectors;
    double threshold = capcheck::kDefaultSimilarityThreshold;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--lexicon", lexicon, "keyword lexicon (TSV)");
        cmd->add_option("--vectors", vectors, "word vectors for similarity");
        cmd->add_option("--sim-threshold", threshold, "minimum keyword similarity")->check(CLI::Range(0.0, 1.0));
    }

    capcheck::CaptionAnalyzer build() const {
        auto lex = lexicon.empty() ? capcheck::Lexicon::builtin() : capcheck::Lexicon::load(lexicon);
        std::shared_ptr<const capcheck::SimilarityProvider> sim;
        if (!vectors.empty()) sim = std::make_shared<capcheck::VectorSimilarity>(capcheck::VectorSimilarity::load(vectors));
        return capcheck::CaptionAnalyzer(std::move(lex), std::move(sim), threshold);
    }
};

int cmd_features(const std::string& data, const SpecFlags& flags) {
    const auto series = capcheck::load_series(data);
    const auto spec = flags.resolve(series);
    const auto clipped = capcheck::clip(series, spec);
    const auto polyline = capcheck::normalize(clipped, spec);
    auto j = capcheck::features_json(
        capcheck::enumerate_features(polyline, capcheck::point_persistence(polyline)), clipped);
    j["granularity"] = capcheck::to_string(capcheck::detect_granularity(clipped));
    j["spec"] = capcheck::spec_to_json(spec);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_lint(const std::string& data, const std::string& captionPath, const SpecFlags& flags,
             const AnalyzerFlags& analyzerFlags, bool strict, bool json) {
    const auto series = capcheck::load_series(data);
    const auto spec = flags.resolve(series);
    const auto caption = capcheck::detail::read_file(captionPath);
    const auto result = capcheck::check(series, spec, caption, analyzerFlags.build());

    if (json) {
        std::cout << capcheck::check_result_json(result).dump(2) << '\n';
    } else {
        for (const auto& d : result.diagnostics) {
            const auto e = d.extent();
            std::cout << capcheck::to_string(d.kind) << ':' << e.begin << '-' << e.end << ": " << d.message << '\n';
        }
    }
    if (capcheck::has_factual_errors(result)) return 1;
    return strict && !result.diagnostics.empty() ? 1 : 0;
}

int cmd_eval(const std::string& corpus, const AnalyzerFlags& analyzerFlags, bool json) {
    const auto items = capcheck::load_corpus(corpus);
    if (items.empty()) throw capcheck::InvalidInput("no corpus bundles under " + corpus);
    const auto report = capcheck::evaluate(items, analyzerFlags.build());
    const auto& t = report.tally;

    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : report.sentences)
            rows.push_back({{"item", s.item}, {"sentence", s.index}, {"text", s.text},
                            {"fn", s.fn}, {"fp", s.fp}, {"im", s.im}, {"correct", s.correct()}});
        std::cout << nlohmann::json{{"sentences", t.sentences}, {"correct", t.correct}, {"fn", t.fn},
                                    {"fp", t.fp}, {"im", t.im}, {"percentCorrect", t.percent_correct()},
                                    {"details", rows}}
                         .dump(2)
                  << '\n';
        return 0;
    }

    for (const auto& s : report.sentences) {
        if (s.correct()) continue;
        std::cout << s.item << '#' << s.index << ':';
        if (s.fn) std::cout << " FN";
        if (s.fp) std::cout << " FP";
        if (s.im) std::cout << " IM";
        std::cout << "  " << s.text << '\n';
    }
    std::cout << "sentences " << t.sentences << '\n'
              << "correct   " << t.correct << '\n'
              << "FN        " << t.fn << '\n'
              << "FP        " << t.fp << '\n'
              << "IM        " << t.im << '\n'
              << "accuracy  " << std::fixed << std::setprecision(2) << t.percent_correct() << "%\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Check a line chart caption against the chart's prominent features"};
    app.require_subcommand(1);

    SpecFlags spec;
    AnalyzerFlags analyzer;
    std::string data, caption, corpus;
    bool strict = false, json = false;

    auto* features = app.add_subcommand("features", "print the top prominent features as JSON");
    features->add_option("data", data, "series file (CSV or JSON)")->required();
    spec.add_to(features);

    auto* lint = app.add_subcommand("lint", "report caption diagnostics");
    lint->add_option("data", data, "series file (CSV or JSON)")->required();
    lint->add_option("caption", caption, "caption text file")->required();
    spec.add_to(lint);
    analyzer.add_to(lint);
    lint->add_flag("--strict", strict, "exit 1 on emphasis mismatches too");
    lint->add_flag("--json", json, "print the full check result as JSON");

    auto* eval = app.add_subcommand("eval", "score the extractor against a labeled corpus");
    eval->add_option("corpus", corpus, "corpus directory")->required();
    analyzer.add_to(eval);
    eval->add_flag("--json", json, "print the tally as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*features) return cmd_features(data, spec);
        if (*lint) return cmd_lint(data, caption, spec, analyzer, strict, json);
        return cmd_eval(corpus, analyzer, json);
    } catch (const std::exception& e) {
        std::cerr << "capcheck: " << e.what() << '\n';
        return 2;
    }
}
