#pragma once

// Sentence-level evaluation against hand-labeled corpora. Each bundle is a
// directory with series.csv, spec.json, caption.txt and gold.json; every
// sentence lands in one or more of FN / FP / IM, or counts as correct.

#include "capcheck/check.hpp"
#include "capcheck/ingest.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace capcheck {

struct GoldReference {
    DescriptionKind kind = DescriptionKind::Rise;
    std::optional<Date> start;  // point kinds use start only
    std::optional<Date> end;
    bool outOfChart = false;
};

struct GoldLabel {
    std::size_t sentenceIndex = 0;
    std::vector<GoldReference> references;
};

struct CorpusItem {
    std::string name;
    TimeSeries series;
    ChartSpec spec;
    std::string caption;
    std::vector<GoldLabel> gold;
};

struct SentenceOutcome {
    std::string item;
    std::size_t index = 0;
    std::string text;
    int fn = 0, fp = 0, im = 0;

    bool correct() const noexcept { return fn == 0 && fp == 0 && im == 0; }
};

/// Per-sentence counts: a sentence with several kinds of error is counted in
/// each of them, so correct + erroneous == sentences but the error columns
/// may add up to more than the erroneous count.
struct ErrorTally {
    std::size_t sentences = 0, correct = 0, fn = 0, fp = 0, im = 0;

    void add(const SentenceOutcome& o) {
        ++sentences;
        if (o.correct()) ++correct;
        if (o.fn) ++fn;
        if (o.fp) ++fp;
        if (o.im) ++im;
    }

    double percent_correct() const { return sentences ? 100.0 * static_cast<double>(correct) / sentences : 0.0; }
};

struct EvalReport {
    ErrorTally tally;
    std::vector<SentenceOutcome> sentences;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::optional<Date> gold_date(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) throw InvalidInput(std::string("gold '") + key + "' must be a date string");
    auto d = parse_iso_date(j[key].get<std::string>());
    if (!d) throw InvalidInput("gold '" + std::string(key) + "' is not a YYYY-MM-DD date: " + j[key].get<std::string>());
    return d;
}

inline std::optional<std::size_t> index_of(const TimeSeries& s, Date d) {
    const auto& pts = s.points();
    const auto it = std::lower_bound(pts.begin(), pts.end(), d, [](const Sample& p, Date v) { return p.t < v; });
    if (it == pts.end() || it->t != d) return std::nullopt;
    return static_cast<std::size_t>(it - pts.begin());
}

// Gold reference with dates resolved to series indices.
struct ResolvedGold {
    DescriptionKind kind;
    bool outOfChart;
    std::size_t start, end;
};

inline bool same_target(const ResolvedGold& g, const GroundedReference& p) {
    if (g.kind != p.pair.description.kind) return false;
    if (g.outOfChart) return p.status == GroundStatus::OutOfChart;
    return p.target && p.target->start == g.start && p.target->end == g.end;
}

} // namespace detail

inline std::vector<GoldLabel> parse_gold(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sentences") || !j["sentences"].is_array())
        throw InvalidInput("gold.json needs a 'sentences' array");
    std::vector<GoldLabel> out;
    for (const auto& s : j["sentences"]) {
        GoldLabel label;
        label.sentenceIndex = s.at("index").get<std::size_t>();
        for (const auto& r : s.value("references", nlohmann::json::array())) {
            GoldReference g;
            const auto kind = description_kind_from_string(r.at("kind").get<std::string>());
            if (!kind) throw InvalidInput("unknown gold kind: " + r.at("kind").get<std::string>());
            g.kind = *kind;
            g.outOfChart = r.value("outOfChart", false);
            g.start = detail::gold_date(r, is_trend(g.kind) ? "start" : "at");
            g.end = is_trend(g.kind) ? detail::gold_date(r, "end") : g.start;
            if (!g.outOfChart && (!g.start || !g.end))
                throw InvalidInput("gold reference needs " + std::string(is_trend(g.kind) ? "'start' and 'end'" : "'at'"));
            label.references.push_back(g);
        }
        out.push_back(std::move(label));
    }
    return out;
}

inline CorpusItem load_corpus_item(const std::filesystem::path& dir) {
    try {
        CorpusItem item{dir.filename().string(), parse_series(detail::read_file(dir / "series.csv")), {}, {}, {}};
        const auto fallback = default_spec(item.series);
        item.spec = std::filesystem::exists(dir / "spec.json")
                        ? spec_from_json(nlohmann::json::parse(detail::read_file(dir / "spec.json")), fallback)
                        : fallback;
        item.caption = detail::read_file(dir / "caption.txt");
        item.gold = parse_gold(nlohmann::json::parse(detail::read_file(dir / "gold.json")));
        return item;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(dir.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw InvalidInput(dir.string() + "/series.csv: " + e.what());
    } catch (const Error& e) {
        throw InvalidInput(dir.string() + ": " + e.what());
    }
}

/// A bundle directory, or a directory whose subdirectories (searched
/// recursively, in name order) are bundles.
inline std::vector<CorpusItem> load_corpus(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) throw InvalidInput("not a directory: " + root.string());
    if (fs::exists(root / "gold.json")) return {load_corpus_item(root)};
    std::vector<fs::path> dirs;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_directory() && fs::exists(e.path() / "gold.json")) dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
    std::vector<CorpusItem> items;
    for (const auto& d : dirs) items.push_back(load_corpus_item(d));
    return items;
}

/// Classifies every sentence of one bundle. Exact (kind, target) agreement
/// pairs first; a leftover prediction with the gold's kind but another target
/// is an intention mismatch; other leftovers are FN (gold) and FP (predicted).
inline std::vector<SentenceOutcome> evaluate_item(const CorpusItem& item, const CaptionAnalyzer& analyzer) {
    const auto result = check(item.series, item.spec, item.caption, analyzer);
    const auto sentences = split_sentences(item.caption);

    std::vector<SentenceOutcome> out;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        SentenceOutcome o{item.name, s, std::string(item.caption.substr(sentences[s].begin, sentences[s].size()))};

        std::vector<detail::ResolvedGold> gold;
        for (const auto& label : item.gold) {
            if (label.sentenceIndex != s) continue;
            for (const auto& g : label.references) {
                detail::ResolvedGold r{g.kind, g.outOfChart, 0, 0};
                if (!g.outOfChart) {
                    const auto a = detail::index_of(result.series, *g.start);
                    const auto b = detail::index_of(result.series, *g.end);
                    if (!a || !b)
                        throw InvalidInput(item.name + ": gold date is not a chart point in sentence " +
                                           std::to_string(s));
                    r.start = *a;
                    r.end = *b;
                }
                gold.push_back(r);
            }
        }
        std::vector<const GroundedReference*> pred;
        for (const auto& rr : result.references)
            if (rr.sentence == s) pred.push_back(&rr.ref);

        std::vector<bool> goldUsed(gold.size()), predUsed(pred.size());
        for (std::size_t g = 0; g < gold.size(); ++g)
            for (std::size_t p = 0; p < pred.size(); ++p)
                if (!predUsed[p] && detail::same_target(gold[g], *pred[p])) {
                    goldUsed[g] = predUsed[p] = true;
                    break;
                }
        for (std::size_t g = 0; g < gold.size(); ++g) {
            if (goldUsed[g]) continue;
            for (std::size_t p = 0; p < pred.size(); ++p)
                if (!predUsed[p] && pred[p]->pair.description.kind == gold[g].kind) {
                    goldUsed[g] = predUsed[p] = true;
                    ++o.im;
                    break;
                }
            if (!goldUsed[g]) ++o.fn;
        }
        o.fp = static_cast<int>(std::count(predUsed.begin(), predUsed.end(), false));
        out.push_back(std::move(o));
    }
    return out;
}

inline EvalReport evaluate(const std::vector<CorpusItem>& items, const CaptionAnalyzer& analyzer) {
    EvalReport report;
    for (const auto& item : items)
        for (auto& o : evaluate_item(item, analyzer)) {
            report.tally.add(o);
            report.sentences.push_back(std::move(o));
        }
    return report;
}

} // namespace capcheck
