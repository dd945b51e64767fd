#pragma once

// Caption analysis: data descriptions, time/description pairing and the
// per-sentence pipeline that ties tokens, time references and descriptions
// together.

#include "capcheck/lexicon.hpp"
#include "capcheck/text.hpp"
#include "capcheck/time_refs.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace capcheck {

inline constexpr double kDefaultSimilarityThreshold = 0.7;

struct DataDescription {
    ByteSpan span;
    std::size_t tokenIndex = 0;
    DescriptionKind kind = DescriptionKind::Rise;
    std::string matchedKeyword;
    double similarity = 1.0;
};

/// Tokens whose lemma matches a lexicon entry exactly (similarity 1.0) or
/// reaches `threshold` under `sim`. Ties go to the higher similarity, then to
/// the earlier lexicon entry. Tokens inside a time reference are skipped.
inline std::vector<DataDescription> extract_data_descriptions(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                                              const SimilarityProvider& sim,
                                                              double threshold = kDefaultSimilarityThreshold,
                                                              const std::vector<TimeReference>& timeRefs = {}) {
    std::vector<char> covered(tokens.size(), 0);
    for (const auto& r : timeRefs)
        for (std::size_t k = r.firstToken; k < r.lastToken && k < tokens.size(); ++k) covered[k] = 1;

    std::vector<DataDescription> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        if (covered[i] || tok.lemma.empty() || !std::isalpha(static_cast<unsigned char>(tok.lemma.front()))) continue;

        const LexiconEntry* best = nullptr;
        double bestSim = -1.0;
        for (const auto& e : lexicon.entries()) {
            if (e.lemma == tok.lemma) {
                best = &e;
                bestSim = 1.0;
                break;
            }
        }
        if (!best) {
            for (const auto& e : lexicon.entries()) {
                const double s = sim.similarity(tok.lemma, e.lemma);
                if (s > bestSim) {
                    bestSim = s;
                    best = &e;
                }
            }
        }
        if (best && bestSim >= threshold) out.push_back({tok.span, i, best->kind, best->lemma, bestSim});
    }
    return out;
}

struct ReferencePair {
    DataDescription description;
    std::vector<TimeReference> times;  // 1 or 2, in text order

    /// The reference supplying the start bound (a start- or point-role mention).
    const TimeReference* start_ref() const {
        for (const auto& t : times)
            if (t.role != BoundaryRole::End) return &t;
        return nullptr;
    }
    /// The reference supplying the end bound (an end- or point-role mention).
    const TimeReference* end_ref() const {
        for (auto it = times.rbegin(); it != times.rend(); ++it)
            if (it->role != BoundaryRole::Start) return &*it;
        return nullptr;
    }
    std::optional<Date> combined_start() const {
        const auto* r = start_ref();
        return r ? std::optional<Date>(r->mention.first) : std::nullopt;
    }
    std::optional<Date> combined_end() const {
        const auto* r = end_ref();
        return r ? std::optional<Date>(r->mention.last) : std::nullopt;
    }
    std::vector<ByteSpan> time_spans() const {
        std::vector<ByteSpan> out;
        for (const auto& t : times) out.push_back(t.span);
        return out;
    }
    /// Description span plus time spans, sorted.
    std::vector<ByteSpan> spans() const {
        auto out = time_spans();
        out.push_back(description.span);
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline bool is_clause_boundary(std::string_view lower) {
    return lower == "," || lower == ";" || lower == ":" || lower == "and" || lower == "but" || lower == "or" ||
           lower == "nor" || lower == "yet" || lower == "so";
}

inline constexpr int kClausePenalty = 3;

inline bool complementary(const TimeReference& a, const TimeReference& b) {
    return (a.role == BoundaryRole::Start && b.role == BoundaryRole::End) ||
           (a.role == BoundaryRole::End && b.role == BoundaryRole::Start);
}

} // namespace detail

/// Tokens strictly between a description and a time reference, with each
/// clause boundary among them costing an extra 3. A boundary cue in front of
/// the mention counts as part of the reference.
inline int pairing_distance(const std::vector<Token>& tokens, const DataDescription& d, const TimeReference& t) {
    std::size_t lo, hi;
    if (d.tokenIndex < t.firstToken) {
        lo = d.tokenIndex + 1;
        hi = std::max(lo, t.cueToken.value_or(t.firstToken));
    } else {
        lo = t.lastToken;
        hi = d.tokenIndex;
    }
    int dist = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        ++dist;
        if (detail::is_clause_boundary(to_lower(tokens[k].text))) dist += detail::kClausePenalty;
    }
    return dist;
}

/// Attaches time references to descriptions by proximity. Candidate links are
/// taken closest first, so a description is claimed by its nearest time
/// reference and a farther one moves on to its next-nearest description. A
/// second reference may join a description only when it completes a start/end
/// range with the first. Unlinked references and descriptions are dropped.
inline std::vector<ReferencePair> pair_refs(const std::vector<Token>& tokens, const std::vector<TimeReference>& timeRefs,
                                            const std::vector<DataDescription>& descriptions) {
    struct Link {
        int distance;
        int timeFirst;  // 0 when the description precedes the time reference
        std::size_t desc;
        std::size_t time;
    };
    std::vector<Link> links;
    for (std::size_t d = 0; d < descriptions.size(); ++d)
        for (std::size_t t = 0; t < timeRefs.size(); ++t)
            links.push_back({pairing_distance(tokens, descriptions[d], timeRefs[t]),
                             descriptions[d].tokenIndex < timeRefs[t].firstToken ? 0 : 1, d, t});
    std::sort(links.begin(), links.end(), [&](const Link& a, const Link& b) {
        return std::tie(a.distance, a.timeFirst, descriptions[a.desc].tokenIndex, timeRefs[a.time].firstToken) <
               std::tie(b.distance, b.timeFirst, descriptions[b.desc].tokenIndex, timeRefs[b.time].firstToken);
    });

    std::vector<char> assigned(timeRefs.size(), 0);
    std::vector<std::vector<std::size_t>> attached(descriptions.size());
    for (const auto& link : links) {
        if (assigned[link.time]) continue;
        auto& slot = attached[link.desc];
        if (slot.empty() || (slot.size() == 1 && detail::complementary(timeRefs[slot.front()], timeRefs[link.time]))) {
            slot.push_back(link.time);
            assigned[link.time] = 1;
        }
    }

    std::vector<ReferencePair> out;
    for (std::size_t d = 0; d < descriptions.size(); ++d) {
        if (attached[d].empty()) continue;
        auto idx = attached[d];
        std::sort(idx.begin(), idx.end());
        ReferencePair pair{descriptions[d], {}};
        for (auto t : idx) pair.times.push_back(timeRefs[t]);
        out.push_back(std::move(pair));
    }
    return out;
}

struct SentenceAnalysis {
    std::size_t index = 0;
    ByteSpan span;
    std::vector<Token> tokens;
    std::vector<TimeReference> timeRefs;
    std::vector<DataDescription> descriptions;
    std::vector<ReferencePair> pairs;
};

struct CaptionAnalysis {
    std::vector<SentenceAnalysis> sentences;
};

/// Immutable bundle of lexicon, lemmatizer and similarity provider. Safe to
/// share across threads once constructed.
class CaptionAnalyzer {
public:
    explicit CaptionAnalyzer(Lexicon lexicon = Lexicon::builtin(),
                             std::shared_ptr<const SimilarityProvider> similarity = nullptr,
                             double threshold = kDefaultSimilarityThreshold)
        : lexicon_(std::move(lexicon)),
          lemmatizer_(lexicon_.vocabulary()),
          similarity_(similarity ? std::move(similarity) : std::make_shared<SynonymSimilarity>(lexicon_)),
          threshold_(threshold) {}

    const Lexicon& lexicon() const noexcept { return lexicon_; }
    const Lemmatizer& lemmatizer() const noexcept { return lemmatizer_; }
    const SimilarityProvider& similarity() const noexcept { return *similarity_; }
    double threshold() const noexcept { return threshold_; }

    SentenceAnalysis analyze_sentence(std::string_view caption, ByteSpan sentence, std::size_t index,
                                      Granularity granularity, DateRange xRange) const {
        SentenceAnalysis s;
        s.index = index;
        s.span = sentence;
        s.tokens = tokenize_and_lemmatize(caption, sentence, index, lemmatizer_);
        s.timeRefs = extract_time_refs(s.tokens, granularity, xRange);
        s.descriptions = extract_data_descriptions(s.tokens, lexicon_, *similarity_, threshold_, s.timeRefs);
        s.pairs = pair_refs(s.tokens, s.timeRefs, s.descriptions);
        return s;
    }

    CaptionAnalysis analyze(std::string_view caption, Granularity granularity, DateRange xRange) const {
        CaptionAnalysis out;
        const auto sentences = split_sentences(caption);
        for (std::size_t i = 0; i < sentences.size(); ++i)
            out.sentences.push_back(analyze_sentence(caption, sentences[i], i, granularity, xRange));
        return out;
    }

private:
    Lexicon lexicon_;
    Lemmatizer lemmatizer_;
    std::shared_ptr<const SimilarityProvider> similarity_;
    double threshold_;
};

} // namespace capcheck
