#pragma once

// Sentence splitting, tokenization and lemmatization for caption text.
// All spans are byte offsets into the original caption.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace capcheck {

struct ByteSpan {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
    friend auto operator<=>(const ByteSpan&, const ByteSpan&) = default;
};

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

inline bool is_word_byte(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u >= 0x80;
}

// Words that end in '.' without ending a sentence.
inline bool is_abbreviation(std::string_view word) {
    static const std::set<std::string, std::less<>> abbrevs = {
        "e.g", "i.e", "etc", "vs", "mr", "mrs", "ms", "dr", "prof", "st", "approx", "ca", "no", "fig",
        "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec", "u.s", "u.k"};
    return abbrevs.count(to_lower(word)) > 0;
}

} // namespace detail

/// Splits at '.', '!' or '?' followed by whitespace or end of text. Decimal
/// points and known abbreviations do not end a sentence.
inline std::vector<ByteSpan> split_sentences(std::string_view text) {
    std::vector<ByteSpan> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::size_t b = start;
        while (b < end && detail::is_space(text[b])) ++b;
        std::size_t e = end;
        while (e > b && detail::is_space(text[e - 1])) --e;
        if (e > b) out.push_back({b, e});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (i + 1 < text.size() && !detail::is_space(text[i + 1])) continue;
        if (c == '.') {
            std::size_t w = i;
            while (w > start && (detail::is_word_byte(text[w - 1]) || text[w - 1] == '.')) --w;
            if (detail::is_abbreviation(text.substr(w, i - w))) continue;
        }
        flush(i + 1);
        start = i + 1;
    }
    flush(text.size());
    return out;
}

struct Token {
    std::string text;
    std::string lemma;
    ByteSpan span;
    std::size_t sentenceIndex = 0;

    bool is_word() const { return !text.empty() && detail::is_word_byte(text.front()); }
};

/// Words are runs of letters/digits, joined across a single inner '-' or '\'',
/// or a '.' inside a number ("3.5", "30-year", "Korea's"). Every other
/// non-space byte becomes a one-byte punctuation token.
inline std::vector<Token> tokenize(std::string_view text, ByteSpan range = {0, std::string_view::npos},
                                   std::size_t sentenceIndex = 0) {
    const std::size_t end = std::min(range.end, text.size());
    std::vector<Token> out;
    std::size_t i = range.begin;
    while (i < end) {
        const char c = text[i];
        if (detail::is_space(c)) {
            ++i;
            continue;
        }
        if (!detail::is_word_byte(c)) {
            out.push_back({std::string(1, c), std::string(1, c), {i, i + 1}, sentenceIndex});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < end) {
            if (detail::is_word_byte(text[j])) {
                ++j;
                continue;
            }
            const char joiner = text[j];
            if ((joiner == '-' || joiner == '\'' || joiner == '.') && j + 1 < end && detail::is_word_byte(text[j + 1])) {
                // '.' joins only inside numbers or dotted abbreviations like "e.g".
                if (joiner == '.' && !std::isdigit(static_cast<unsigned char>(text[j - 1])) && j - i != 1)
                    break;
                ++j;
                continue;
            }
            break;
        }
        out.push_back({std::string(text.substr(i, j - i)), {}, {i, j}, sentenceIndex});
        i = j;
    }
    return out;
}

/// Dictionary-checked suffix-stripping lemmatizer. Candidate base forms are
/// generated by the suffix rules in order; the first one found in the
/// vocabulary wins, otherwise a spelling heuristic picks one.
class Lemmatizer {
public:
    Lemmatizer() = default;

    template <typename Range>
    explicit Lemmatizer(const Range& vocabulary) {
        for (const auto& w : vocabulary) add_word(w);
    }

    void add_word(std::string_view word) { vocabulary_.insert(to_lower(word)); }

    std::string lemma(std::string_view word) const {
        std::string w = to_lower(word);
        // Possessive.
        if (w.size() > 2 && w.compare(w.size() - 2, 2, "'s") == 0) w.resize(w.size() - 2);
        if (w.empty() || !std::isalpha(static_cast<unsigned char>(w.back()))) return w;

        if (const auto it = irregular().find(w); it != irregular().end()) return it->second;
        if (vocabulary_.count(w)) return w;

        const auto candidates = candidates_for(w);
        for (const auto& c : candidates)
            if (vocabulary_.count(c) || irregular_bases().count(c)) return c;
        return candidates.empty() ? w : heuristic(w, candidates);
    }

private:
    static bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

    static bool ends_with(const std::string& w, std::string_view suffix) {
        return w.size() > suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    static std::vector<std::string> candidates_for(const std::string& w) {
        std::vector<std::string> out;
        auto stem_forms = [&](std::string stem) {
            if (stem.size() < 2) return;
            out.push_back(stem);
            out.push_back(stem + "e");
            const std::size_t n = stem.size();
            if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1])) out.push_back(stem.substr(0, n - 1));
        };
        if (ends_with(w, "ies")) out.push_back(w.substr(0, w.size() - 3) + "y");
        if (ends_with(w, "ied")) out.push_back(w.substr(0, w.size() - 3) + "y");
        if (ends_with(w, "ing")) stem_forms(w.substr(0, w.size() - 3));
        if (ends_with(w, "ed")) stem_forms(w.substr(0, w.size() - 2));
        if (ends_with(w, "est")) stem_forms(w.substr(0, w.size() - 3));
        if (ends_with(w, "es")) out.push_back(w.substr(0, w.size() - 2));
        if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is") && w.size() > 3)
            out.push_back(w.substr(0, w.size() - 1));
        return out;
    }

    // Without a dictionary hit: undo consonant doubling, restore a silent 'e'
    // after consonant-vowel-consonant stems, otherwise take the bare stem.
    static std::string heuristic(const std::string& w, const std::vector<std::string>& candidates) {
        const bool verbal = ends_with(w, "ing") || ends_with(w, "ed");
        if (!verbal) {
            if (ends_with(w, "es") && !ends_with(w, "ies")) {
                const std::string stem = w.substr(0, w.size() - 2);
                const bool sibilant = ends_with(stem, "s") || ends_with(stem, "x") || ends_with(stem, "z") ||
                                      ends_with(stem, "ch") || ends_with(stem, "sh");
                return sibilant ? stem : w.substr(0, w.size() - 1);
            }
            return candidates.front();
        }
        std::string stem = w.substr(0, w.size() - (ends_with(w, "ing") ? 3 : 2));
        const std::size_t n = stem.size();
        if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) && stem[n - 1] != 'l' &&
            stem[n - 1] != 's' && stem[n - 1] != 'z')
            return stem.substr(0, n - 1);
        if (n >= 3 && !is_vowel(stem[n - 1]) && is_vowel(stem[n - 2]) && !is_vowel(stem[n - 3]) &&
            stem[n - 1] != 'w' && stem[n - 1] != 'x' && stem[n - 1] != 'y' && stem[n - 1] != 'r')
            return stem + "e";
        return stem;
    }

    static const std::unordered_map<std::string, std::string>& irregular() {
        static const std::unordered_map<std::string, std::string> table = {
            {"rose", "rise"},     {"risen", "rise"},   {"rising", "rise"},  {"fell", "fall"},
            {"fallen", "fall"},   {"grew", "grow"},    {"grown", "grow"},   {"sank", "sink"},
            {"sunk", "sink"},     {"sunken", "sink"},  {"climbed", "climb"}, {"soared", "soar"},
            {"leapt", "leap"},    {"leaped", "leap"},  {"shrank", "shrink"}, {"shrunk", "shrink"},
            {"was", "be"},        {"were", "be"},      {"is", "be"},        {"are", "be"},
            {"been", "be"},       {"had", "have"},     {"has", "have"},     {"did", "do"},
            {"does", "do"},       {"highs", "high"},   {"lows", "low"},     {"highest", "high"},
            {"lowest", "low"},    {"maxima", "maximum"}, {"minima", "minimum"}, {"data", "data"},
            {"dove", "dive"},     {"dived", "dive"},   {"slid", "slide"},   {"went", "go"},      {"gone", "go"},
            {"peaked", "peak"},   {"bottomed", "bottom"}, {"topped", "top"}, {"dipped", "dip"},
            {"dipping", "dip"},   {"dropped", "drop"}, {"dropping", "drop"}, {"plummeted", "plummet"},
            {"skyrocketed", "skyrocket"}, {"skyrocketing", "skyrocket"}, {"fixed", "fix"},
        };
        return table;
    }

    static const std::set<std::string, std::less<>>& irregular_bases() {
        static const std::set<std::string, std::less<>> bases = [] {
            std::set<std::string, std::less<>> s;
            for (const auto& [form, base] : irregular()) s.insert(base);
            return s;
        }();
        return bases;
    }

    std::set<std::string, std::less<>> vocabulary_;
};

/// Tokens of one sentence with lemmas filled in.
inline std::vector<Token> tokenize_and_lemmatize(std::string_view caption, ByteSpan sentence,
                                                 std::size_t sentenceIndex, const Lemmatizer& lemmatizer) {
    auto tokens = tokenize(caption, sentence, sentenceIndex);
    for (auto& t : tokens) t.lemma = t.is_word() ? lemmatizer.lemma(t.text) : t.text;
    return tokens;
}

} // namespace capcheck
