#pragma once

// Data-description keyword lexicon and word-similarity providers.

#include "capcheck/error.hpp"
#include "capcheck/text.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace capcheck {

enum class DescriptionKind { Rise, Fall, LocalMax, LocalMin };

inline std::string_view to_string(DescriptionKind k) {
    switch (k) {
    case DescriptionKind::Rise: return "rise";
    case DescriptionKind::Fall: return "fall";
    case DescriptionKind::LocalMax: return "localMax";
    case DescriptionKind::LocalMin: return "localMin";
    }
    return "rise";
}

inline std::optional<DescriptionKind> description_kind_from_string(std::string_view s) {
    const auto k = to_lower(s);
    if (k == "rise" || k == "up" || k == "upward") return DescriptionKind::Rise;
    if (k == "fall" || k == "down" || k == "downward") return DescriptionKind::Fall;
    if (k == "localmax" || k == "max" || k == "maximum") return DescriptionKind::LocalMax;
    if (k == "localmin" || k == "min" || k == "minimum") return DescriptionKind::LocalMin;
    return std::nullopt;
}

inline bool is_trend(DescriptionKind k) { return k == DescriptionKind::Rise || k == DescriptionKind::Fall; }

struct LexiconEntry {
    DescriptionKind kind;
    std::string lemma;
    std::vector<std::string> synonyms;
};

// Bundled default; data/lexicon.tsv carries the same content.
inline constexpr std::string_view kDefaultLexicon =
    "# kind\tlemma\tsynonyms...\n"
    "rise\trise\tascend\tupswing\n"
    "rise\tincrease\tgain\tuptick\n"
    "rise\tgrow\texpand\n"
    "rise\tclimb\tmount\n"
    "rise\tsoar\trocket\tballoon\n"
    "rise\tskyrocket\texplode\n"
    "rise\tspike\n"
    "rise\tsurge\tboom\n"
    "rise\tjump\tleap\n"
    "fall\tfall\ttumble\tslide\n"
    "fall\tdecline\tslip\tdownturn\n"
    "fall\tdecrease\tshrink\treduce\n"
    "fall\tdrop\tslump\n"
    "fall\tdip\n"
    "fall\tplunge\tdive\tcrash\n"
    "fall\tplummet\tcollapse\n"
    "fall\tsink\tsag\n"
    "localMax\tpeak\tsummit\tapex\tzenith\n"
    "localMax\tmaximum\n"
    "localMax\thigh\n"
    "localMax\ttop\n"
    "localMax\trecord\n"
    "localMin\tminimum\n"
    "localMin\tlow\n"
    "localMin\tbottom\tnadir\n"
    "localMin\ttrough\n";

/// Keyword list loaded from `kind<TAB>lemma[<TAB>synonym...]` lines.
/// Blank lines and lines starting with '#' are ignored.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {}

    static Lexicon parse(std::string_view text) {
        std::vector<LexiconEntry> entries;
        std::size_t row = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            std::string line(text.substr(pos, nl - pos));
            pos = nl + 1;
            ++row;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;

            std::vector<std::string> fields;
            std::size_t start = 0;
            while (true) {
                const auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
                if (tab == std::string::npos) break;
                start = tab + 1;
            }
            if (fields.size() < 2 || fields[1].empty()) throw ParseError("lexicon line needs kind<TAB>lemma", row);
            const auto kind = description_kind_from_string(fields[0]);
            if (!kind) throw ParseError("unknown description kind '" + fields[0] + "'", row, 1);
            LexiconEntry e{*kind, to_lower(fields[1]), {}};
            for (std::size_t i = 2; i < fields.size(); ++i)
                if (!fields[i].empty()) e.synonyms.push_back(to_lower(fields[i]));
            entries.push_back(std::move(e));
        }
        return Lexicon(std::move(entries));
    }

    static Lexicon load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open lexicon " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    static const Lexicon& builtin() {
        static const Lexicon lex = parse(kDefaultLexicon);
        return lex;
    }

    const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }

    /// Every lemma and synonym; used to seed the lemmatizer's vocabulary.
    std::vector<std::string> vocabulary() const {
        std::vector<std::string> out;
        for (const auto& e : entries_) {
            out.push_back(e.lemma);
            out.insert(out.end(), e.synonyms.begin(), e.synonyms.end());
        }
        return out;
    }

private:
    std::vector<LexiconEntry> entries_;
};

/// Word-to-word similarity in [0, 1]; symmetric with similarity(w, w) = 1.
class SimilarityProvider {
public:
    virtual ~SimilarityProvider() = default;
    virtual double similarity(std::string_view a, std::string_view b) const = 0;
};

/// Curated synonyms: 1.0 for identical words or words listed together on one
/// lexicon line, 0.0 otherwise.
class SynonymSimilarity final : public SimilarityProvider {
public:
    explicit SynonymSimilarity(const Lexicon& lexicon) {
        for (const auto& e : lexicon.entries()) {
            std::vector<std::string> group{e.lemma};
            group.insert(group.end(), e.synonyms.begin(), e.synonyms.end());
            for (const auto& a : group)
                for (const auto& b : group)
                    if (a != b) pairs_.insert(a + '\t' + b);
        }
    }

    double similarity(std::string_view a, std::string_view b) const override {
        if (a == b) return 1.0;
        std::string key(a);
        key += '\t';
        key += b;
        return pairs_.count(key) ? 1.0 : 0.0;
    }

private:
    std::set<std::string, std::less<>> pairs_;
};

/// Cosine similarity over static word vectors (`word v1 v2 ... vk` per line).
/// Unknown words are similar only to themselves; negative cosines clamp to 0.
class VectorSimilarity final : public SimilarityProvider {
public:
    static VectorSimilarity parse(std::string_view text) {
        VectorSimilarity out;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            ++row;
            std::istringstream fields(line);
            std::string word;
            if (!(fields >> word) || word.front() == '#') continue;
            std::vector<double> vec;
            std::string tok;
            while (fields >> tok) {
                try {
                    std::size_t used = 0;
                    vec.push_back(std::stod(tok, &used));
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw ParseError("invalid vector component '" + tok + "'", row, vec.size() + 2);
                }
            }
            if (vec.empty()) throw ParseError("word without vector", row);
            if (out.dim_ == 0) out.dim_ = vec.size();
            if (vec.size() != out.dim_) throw ParseError("inconsistent vector dimension", row);
            double norm = 0;
            for (double x : vec) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 0)
                for (double& x : vec) x /= norm;
            out.vectors_[to_lower(word)] = std::move(vec);
        }
        return out;
    }

    static VectorSimilarity load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open word vectors " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }

    double similarity(std::string_view a, std::string_view b) const override {
        if (a == b) return 1.0;
        const auto ia = vectors_.find(std::string(a));
        const auto ib = vectors_.find(std::string(b));
        if (ia == vectors_.end() || ib == vectors_.end()) return 0.0;
        double dot = 0;
        for (std::size_t i = 0; i < dim_; ++i) dot += ia->second[i] * ib->second[i];
        return std::clamp(dot, 0.0, 1.0);
    }

private:
    std::size_t dim_ = 0;
    std::unordered_map<std::string, std::vector<double>> vectors_;
};

} // namespace capcheck
