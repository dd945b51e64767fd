#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

std::vector<std::string> sentences_of(std::string_view text) {
    std::vector<std::string> out;
    for (auto s : split_sentences(text)) out.emplace_back(text.substr(s.begin, s.size()));
    return out;
}

std::vector<std::string> words_of(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& t : tokenize(text)) out.push_back(t.text);
    return out;
}

const Lemmatizer& lemmatizer() {
    static const Lemmatizer lem(Lexicon::builtin().vocabulary());
    return lem;
}

} // namespace

TEST(Sentences, SplitsOnTerminators) {
    EXPECT_EQ(sentences_of("Prices rose. Then they fell!  Why? "),
              (std::vector<std::string>{"Prices rose.", "Then they fell!", "Why?"}));
}

TEST(Sentences, KeepsDecimalsAndAbbreviations) {
    EXPECT_EQ(sentences_of("It rose 3.5 percent since Nov. 1997, e.g. in Q3. Done."),
              (std::vector<std::string>{"It rose 3.5 percent since Nov. 1997, e.g. in Q3.", "Done."}));
}

TEST(Sentences, SpansAreByteOffsets) {
    const std::string text = "  A b.  C d.";
    const auto spans = split_sentences(text);
    ASSERT_EQ(spans.size(), 2u);
    EXPECT_EQ(spans[0], (ByteSpan{2, 6}));
    EXPECT_EQ(spans[1], (ByteSpan{8, 12}));
}

TEST(Sentences, EmptyAndWhitespace) {
    EXPECT_TRUE(split_sentences("").empty());
    EXPECT_TRUE(split_sentences("   \n ").empty());
    EXPECT_EQ(sentences_of("no terminator"), (std::vector<std::string>{"no terminator"}));
}

TEST(Tokenize, JoinsHyphensApostrophesAndDecimals) {
    EXPECT_EQ(words_of("The 30-year rate, Korea's GDP: 3.5%."),
              (std::vector<std::string>{"The", "30-year", "rate", ",", "Korea's", "GDP", ":", "3.5", "%", "."}));
}

TEST(Tokenize, SentenceFinalPeriodAfterNumberIsSeparate) {
    EXPECT_EQ(words_of("until 1987."), (std::vector<std::string>{"until", "1987", "."}));
    EXPECT_EQ(words_of("in 1987.5"), (std::vector<std::string>{"in", "1987.5"}));
}

TEST(Tokenize, SpansPointIntoOriginal) {
    const std::string text = "Rates peaked in 1981";
    for (const auto& t : tokenize(text)) EXPECT_EQ(text.substr(t.span.begin, t.span.size()), t.text);
}

TEST(Tokenize, NonAsciiBytesStayInWords) {
    EXPECT_EQ(words_of("caf\xc3\xa9 prices"), (std::vector<std::string>{"caf\xc3\xa9", "prices"}));
}

TEST(Lemmatizer, PaperExamples) {
    EXPECT_EQ(lemmatizer().lemma("rising"), "rise");
    EXPECT_EQ(lemmatizer().lemma("soared"), "soar");
}

TEST(Lemmatizer, RegularInflections) {
    const auto& lem = lemmatizer();
    EXPECT_EQ(lem.lemma("peaks"), "peak");
    EXPECT_EQ(lem.lemma("peaked"), "peak");
    EXPECT_EQ(lem.lemma("declined"), "decline");
    EXPECT_EQ(lem.lemma("declining"), "decline");
    EXPECT_EQ(lem.lemma("increases"), "increase");
    EXPECT_EQ(lem.lemma("dipped"), "dip");
    EXPECT_EQ(lem.lemma("plunging"), "plunge");
    EXPECT_EQ(lem.lemma("surged"), "surge");
    EXPECT_EQ(lem.lemma("jumps"), "jump");
    EXPECT_EQ(lem.lemma("troughs"), "trough");
    EXPECT_EQ(lem.lemma("skyrocketed"), "skyrocket");
    EXPECT_EQ(lem.lemma("Climbing"), "climb");
}

TEST(Lemmatizer, IrregularForms) {
    const auto& lem = lemmatizer();
    EXPECT_EQ(lem.lemma("rose"), "rise");
    EXPECT_EQ(lem.lemma("fell"), "fall");
    EXPECT_EQ(lem.lemma("grew"), "grow");
    EXPECT_EQ(lem.lemma("sank"), "sink");
    EXPECT_EQ(lem.lemma("highest"), "high");
    EXPECT_EQ(lem.lemma("lows"), "low");
}

TEST(Lemmatizer, UnknownWordsUseHeuristics) {
    const auto& lem = lemmatizer();
    EXPECT_EQ(lem.lemma("stopped"), "stop");
    EXPECT_EQ(lem.lemma("hoping"), "hope");
    EXPECT_EQ(lem.lemma("prices"), "price");
    EXPECT_EQ(lem.lemma("Korea's"), "korea");
    EXPECT_EQ(lem.lemma("1987"), "1987");
    EXPECT_EQ(lem.lemma("this"), "this");
}
