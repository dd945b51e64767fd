#pragma once

// Rule-based temporal expression recognizer.
//
// Recognized forms (case-insensitive unless noted):
//   1981                      year (1000-2999)
//   the 1990s / 1990's        decade
//   Nov 1997, March of 2020   month-year
//   March 15, 2020            month-day-year (also 15 March 2020)
//   March                     bare month, capitalized; resolved inside the x range
//   summer 2019               season (winter Y = Dec Y .. Feb Y+1)
//   Q3 2019, third quarter of 2019
//   the last six months       relative duration ending at the x range end
//
// Each mention is tagged start / end / point from the words in front of it.

#include "capcheck/chart_model.hpp"
#include "capcheck/date.hpp"
#include "capcheck/text.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capcheck {

enum class BoundaryRole { Point, Start, End };
enum class MentionGranularity { Day, Month, Year, Season, Quarter };
enum class TimeForm { Year, Decade, MonthYear, DayMonthYear, BareMonth, Season, Quarter, Relative };
enum class RelativeUnit { Day, Week, Month, Year, Decade };

inline std::string_view to_string(BoundaryRole r) {
    switch (r) {
    case BoundaryRole::Point: return "point";
    case BoundaryRole::Start: return "start";
    case BoundaryRole::End: return "end";
    }
    return "point";
}

inline std::string_view to_string(MentionGranularity g) {
    switch (g) {
    case MentionGranularity::Day: return "day";
    case MentionGranularity::Month: return "month";
    case MentionGranularity::Year: return "year";
    case MentionGranularity::Season: return "season";
    case MentionGranularity::Quarter: return "quarter";
    }
    return "day";
}

struct TimeReference {
    ByteSpan span;
    std::size_t firstToken = 0;  // token range [firstToken, lastToken) within the sentence
    std::size_t lastToken = 0;
    std::optional<std::size_t> cueToken;  // boundary cue ("from", "until", ...) governing this mention
    BoundaryRole role = BoundaryRole::Point;
    TimeForm form = TimeForm::Year;
    MentionGranularity granularity = MentionGranularity::Year;
    DateRange mention;  // exactly the mentioned unit
    DateRange window;   // mention widened to whole units of the series granularity
    int amount = 0;     // Relative only
    RelativeUnit unit = RelativeUnit::Year;

    std::optional<Date> resolved_start() const {
        return role == BoundaryRole::End ? std::nullopt : std::optional<Date>(mention.first);
    }
    std::optional<Date> resolved_end() const {
        return role == BoundaryRole::Start ? std::nullopt : std::optional<Date>(mention.last);
    }
};

namespace detail {

inline constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december"};

inline std::optional<unsigned> month_number(std::string_view lower) {
    for (unsigned m = 0; m < 12; ++m) {
        const auto full = kMonthNames[m];
        if (lower == full) return m + 1;
        if (lower.size() == 3 && full.substr(0, 3) == lower) return m + 1;
    }
    if (lower == "sept") return 9u;
    return std::nullopt;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::optional<int> year_number(std::string_view s) {
    if (s.size() != 4 || !all_digits(s)) return std::nullopt;
    const int y = std::stoi(std::string(s));
    if (y < 1000 || y > 2999) return std::nullopt;
    return y;
}

inline std::optional<int> decade_number(std::string_view lower) {
    std::string_view digits;
    if (lower.size() == 5 && lower[4] == 's') digits = lower.substr(0, 4);
    else if (lower.size() == 6 && lower.substr(4) == "'s") digits = lower.substr(0, 4);
    else return std::nullopt;
    const auto y = year_number(digits);
    if (!y || *y % 10 != 0) return std::nullopt;
    return y;
}

inline std::optional<unsigned> day_number(std::string_view lower) {
    std::string_view digits = lower;
    for (std::string_view suf : {"st", "nd", "rd", "th"})
        if (lower.size() > 2 && lower.substr(lower.size() - 2) == suf) digits = lower.substr(0, lower.size() - 2);
    if (digits.empty() || digits.size() > 2 || !all_digits(digits)) return std::nullopt;
    const unsigned d = static_cast<unsigned>(std::stoi(std::string(digits)));
    if (d < 1 || d > 31) return std::nullopt;
    return d;
}

inline std::optional<int> small_number(std::string_view lower) {
    static constexpr std::array<std::string_view, 21> words = {
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
        "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};
    for (std::size_t i = 1; i < words.size(); ++i)
        if (lower == words[i]) return static_cast<int>(i);
    if (all_digits(lower) && lower.size() <= 3) {
        const int n = std::stoi(std::string(lower));
        if (n > 0) return n;
    }
    return std::nullopt;
}

inline std::optional<RelativeUnit> relative_unit(std::string_view lower) {
    if (lower == "day" || lower == "days") return RelativeUnit::Day;
    if (lower == "week" || lower == "weeks") return RelativeUnit::Week;
    if (lower == "month" || lower == "months") return RelativeUnit::Month;
    if (lower == "year" || lower == "years") return RelativeUnit::Year;
    if (lower == "decade" || lower == "decades") return RelativeUnit::Decade;
    return std::nullopt;
}

inline std::optional<unsigned> ordinal_quarter(std::string_view lower) {
    if (lower == "first" || lower == "1st") return 1u;
    if (lower == "second" || lower == "2nd") return 2u;
    if (lower == "third" || lower == "3rd") return 3u;
    if (lower == "fourth" || lower == "4th") return 4u;
    return std::nullopt;
}

inline std::optional<int> season_index(std::string_view lower) {
    if (lower == "spring") return 0;
    if (lower == "summer") return 1;
    if (lower == "fall" || lower == "autumn") return 2;
    if (lower == "winter") return 3;
    return std::nullopt;
}

inline DateRange season_range(int season, int year) {
    switch (season) {
    case 0: return {month_first(year, 3), month_last(year, 5)};
    case 1: return {month_first(year, 6), month_last(year, 8)};
    case 2: return {month_first(year, 9), month_last(year, 11)};
    default: return {month_first(year, 12), month_last(year + 1, 2)};
    }
}

inline DateRange quarter_range(unsigned q, int year) {
    const unsigned m = 3 * (q - 1) + 1;
    return {month_first(year, m), month_last(year, m + 2)};
}

inline DateRange relative_range(int amount, RelativeUnit unit, Date anchor) {
    using std::chrono::days;
    switch (unit) {
    case RelativeUnit::Day: return {anchor - days{amount - 1}, anchor};
    case RelativeUnit::Week: return {anchor - days{7 * amount - 1}, anchor};
    case RelativeUnit::Month: return {add_months(anchor + days{1}, -amount), anchor};
    case RelativeUnit::Year: return {add_months(anchor + days{1}, -12 * amount), anchor};
    case RelativeUnit::Decade: return {add_months(anchor + days{1}, -120 * amount), anchor};
    }
    return {anchor, anchor};
}

inline DateRange widen(const DateRange& r, Granularity g) {
    switch (g) {
    case Granularity::Day: return r;
    case Granularity::Week: {
        const auto isoFirst = std::chrono::weekday{r.first}.iso_encoding();
        const auto isoLast = std::chrono::weekday{r.last}.iso_encoding();
        return {r.first - std::chrono::days{isoFirst - 1}, r.last + std::chrono::days{7 - isoLast}};
    }
    case Granularity::Month:
        return {month_first(year_of(r.first), month_of(r.first)), month_last(year_of(r.last), month_of(r.last))};
    case Granularity::Year: return {year_range(year_of(r.first)).first, year_range(year_of(r.last)).last};
    }
    return r;
}

struct FormMatch {
    std::size_t end;  // one past the last token
    TimeForm form;
    MentionGranularity granularity;
    DateRange mention;
    int amount = 0;
    RelativeUnit unit = RelativeUnit::Year;
};

class TimeGrammar {
public:
    TimeGrammar(const std::vector<Token>& tokens, DateRange xRange) : tokens_(tokens), xRange_(xRange) {
        lower_.reserve(tokens.size());
        for (const auto& t : tokens) lower_.push_back(to_lower(t.text));
    }

    std::optional<FormMatch> match_at(std::size_t i) const {
        if (i < size() && lower_[i] == "the") {
            if (auto m = match_body(i + 1)) return m;
            return std::nullopt;
        }
        return match_body(i);
    }

    const std::string& lower(std::size_t i) const { return lower_[i]; }
    std::size_t size() const { return tokens_.size(); }

private:
    bool is(std::size_t i, std::string_view w) const { return i < size() && lower_[i] == w; }

    std::optional<int> year_at(std::size_t i) const {
        return i < size() ? year_number(lower_[i]) : std::nullopt;
    }

    // Optional "of" or "," before a year.
    std::optional<std::pair<int, std::size_t>> year_after(std::size_t i) const {
        if (is(i, "of") || is(i, ",")) {
            if (auto y = year_at(i + 1)) return std::pair{*y, i + 2};
            return std::nullopt;
        }
        if (auto y = year_at(i)) return std::pair{*y, i + 1};
        return std::nullopt;
    }

    std::optional<FormMatch> match_body(std::size_t i) const {
        if (i >= size()) return std::nullopt;
        const std::string& w = lower_[i];

        if (w == "last" || w == "past" || w == "previous") {
            std::size_t j = i + 1;
            int amount = 1;
            if (j < size()) {
                if (auto n = small_number(lower_[j])) {
                    amount = *n;
                    ++j;
                }
            }
            if (j < size()) {
                if (auto unit = relative_unit(lower_[j])) {
                    const MentionGranularity g = *unit == RelativeUnit::Day || *unit == RelativeUnit::Week
                                                     ? MentionGranularity::Day
                                                     : *unit == RelativeUnit::Month ? MentionGranularity::Month
                                                                                    : MentionGranularity::Year;
                    return FormMatch{j + 1, TimeForm::Relative, g, relative_range(amount, *unit, xRange_.last),
                                     amount, *unit};
                }
            }
            return std::nullopt;
        }

        if (auto s = season_index(w)) {
            if (auto y = year_after(i + 1))
                return FormMatch{y->second, TimeForm::Season, MentionGranularity::Season, season_range(*s, y->first)};
            return std::nullopt;
        }

        if (w.size() == 2 && w[0] == 'q' && w[1] >= '1' && w[1] <= '4') {
            if (auto y = year_after(i + 1)) {
                const unsigned q = static_cast<unsigned>(w[1] - '0');
                return FormMatch{y->second, TimeForm::Quarter, MentionGranularity::Quarter, quarter_range(q, y->first)};
            }
            return std::nullopt;
        }
        if (auto q = ordinal_quarter(w); q && is(i + 1, "quarter")) {
            if (auto y = year_after(i + 2))
                return FormMatch{y->second, TimeForm::Quarter, MentionGranularity::Quarter, quarter_range(*q, y->first)};
            return std::nullopt;
        }

        if (auto d = decade_number(w))
            return FormMatch{i + 1, TimeForm::Decade, MentionGranularity::Year,
                             {year_range(*d).first, year_range(*d + 9).last}};

        if (auto m = month_number(w)) {
            std::size_t j = i + 1;
            if (w.size() <= 4 && is(j, ".")) ++j;
            if (j < size()) {
                if (auto day = day_number(lower_[j])) {
                    std::size_t k = j + 1;
                    if (is(k, ",")) ++k;
                    if (auto y = year_at(k)) {
                        if (auto date = make_date(*y, *m, *day))
                            return FormMatch{k + 1, TimeForm::DayMonthYear, MentionGranularity::Day, {*date, *date}};
                        return std::nullopt;
                    }
                }
            }
            if (auto y = year_after(j))
                return FormMatch{y->second, TimeForm::MonthYear, MentionGranularity::Month, month_range(y->first, *m)};
            // Bare months must be capitalized. A lone "May" is skipped: it is
            // indistinguishable from the modal verb at sentence start.
            const auto& original = tokens_[i].text;
            if (std::isupper(static_cast<unsigned char>(original.front())) && w != "may") {
                for (int y = year_of(xRange_.last); y >= year_of(xRange_.first); --y) {
                    const auto r = month_range(y, *m);
                    if (r.first <= xRange_.last && r.last >= xRange_.first)
                        return FormMatch{j, TimeForm::BareMonth, MentionGranularity::Month, r};
                }
            }
            return std::nullopt;
        }

        if (auto day = day_number(w)) {
            if (i + 1 < size()) {
                if (auto m = month_number(lower_[i + 1])) {
                    std::size_t k = i + 2;
                    if (is(k, ".")) ++k;
                    if (is(k, ",")) ++k;
                    if (auto y = year_at(k)) {
                        if (auto date = make_date(*y, *m, *day))
                            return FormMatch{k + 1, TimeForm::DayMonthYear, MentionGranularity::Day, {*date, *date}};
                    }
                }
            }
        }

        if (auto y = year_number(w)) return FormMatch{i + 1, TimeForm::Year, MentionGranularity::Year, year_range(*y)};
        return std::nullopt;
    }

    const std::vector<Token>& tokens_;
    std::vector<std::string> lower_;
    DateRange xRange_;
};

inline bool is_filler(std::string_view w) {
    return w == "in" || w == "around" || w == "about" || w == "approximately" || w == "roughly" || w == "circa" ||
           w == "early" || w == "late" || w == "mid" || w == "at";
}

enum class Cue { None, Start, End, Between, And };

inline Cue cue_of(std::string_view w) {
    if (w == "from" || w == "since" || w == "after" || w == "starting" || w == "beginning") return Cue::Start;
    if (w == "to" || w == "until" || w == "till" || w == "through" || w == "thru" || w == "by" || w == "ending")
        return Cue::End;
    if (w == "between") return Cue::Between;
    if (w == "and") return Cue::And;
    return Cue::None;
}

} // namespace detail

/// Time mentions in one sentence's tokens, left to right. Unparseable
/// candidates are skipped.
inline std::vector<TimeReference> extract_time_refs(const std::vector<Token>& tokens, Granularity granularity,
                                                    DateRange xRange) {
    detail::TimeGrammar grammar(tokens, xRange);
    std::vector<TimeReference> out;
    bool openBetween = false;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const auto match = grammar.match_at(i);
        if (!match) {
            ++i;
            continue;
        }
        TimeReference ref;
        ref.firstToken = i;
        ref.lastToken = match->end;
        ref.span = {tokens[i].span.begin, tokens[match->end - 1].span.end};
        ref.form = match->form;
        ref.granularity = match->granularity;
        ref.mention = match->mention;
        ref.window = detail::widen(match->mention, granularity);
        ref.amount = match->amount;
        ref.unit = match->unit;

        detail::Cue cue = detail::Cue::None;
        std::size_t cuePos = 0;
        if (i > 0) {
            cuePos = i - 1;
            cue = detail::cue_of(grammar.lower(cuePos));
            if (cue == detail::Cue::None && detail::is_filler(grammar.lower(cuePos)) && cuePos > 0)
                cue = detail::cue_of(grammar.lower(--cuePos));
        }
        switch (cue) {
        case detail::Cue::Start: ref.role = BoundaryRole::Start; break;
        case detail::Cue::End: ref.role = BoundaryRole::End; break;
        case detail::Cue::Between:
            ref.role = BoundaryRole::Start;
            openBetween = true;
            break;
        case detail::Cue::And: ref.role = openBetween ? BoundaryRole::End : BoundaryRole::Point; break;
        case detail::Cue::None: ref.role = BoundaryRole::Point; break;
        }
        if (cue != detail::Cue::Between) openBetween = false;
        if (ref.role != BoundaryRole::Point) ref.cueToken = cuePos;
        out.push_back(ref);
        i = match->end;
    }
    return out;
}

/// Canonical surface text for a reference, including a cue word for its role
/// ("from", "until" or "in"). Re-parsing it yields the same reference.
inline std::string format_canonical(const TimeReference& ref) {
    std::string prefix = ref.role == BoundaryRole::Start ? "from " : ref.role == BoundaryRole::End ? "until " : "in ";
    auto month_name = [](unsigned m) {
        std::string s(detail::kMonthNames[m - 1]);
        s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        return s;
    };
    const int y = year_of(ref.mention.first);
    const unsigned m = month_of(ref.mention.first);
    switch (ref.form) {
    case TimeForm::Year: return prefix + std::to_string(y);
    case TimeForm::Decade: return prefix + "the " + std::to_string(y) + "s";
    case TimeForm::MonthYear: return prefix + month_name(m) + " " + std::to_string(y);
    case TimeForm::DayMonthYear:
        return prefix + month_name(m) + " " + std::to_string(day_of(ref.mention.first)) + ", " + std::to_string(y);
    case TimeForm::BareMonth: return prefix + month_name(m);
    case TimeForm::Season: {
        static constexpr std::array<std::string_view, 4> names = {"spring", "summer", "fall", "winter"};
        const int idx = m == 3 ? 0 : m == 6 ? 1 : m == 9 ? 2 : 3;
        return prefix + std::string(names[idx]) + " " + std::to_string(y);
    }
    case TimeForm::Quarter: return prefix + "Q" + std::to_string((m - 1) / 3 + 1) + " " + std::to_string(y);
    case TimeForm::Relative: {
        static constexpr std::array<std::string_view, 5> units = {"day", "week", "month", "year", "decade"};
        std::string unit(units[static_cast<int>(ref.unit)]);
        if (ref.amount != 1) unit += "s";
        return prefix + "the last " + std::to_string(ref.amount) + " " + unit;
    }
    }
    return prefix;
}

} // namespace capcheck
