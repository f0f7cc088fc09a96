#include <gtest/gtest.h>

#include "support.hpp"

using namespace cortex;
using testing_support::Gen;

namespace {

std::vector<std::string> texts(const std::vector<SentenceSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.push_back(s.text);
  return out;
}

PipelineConfig bare() { return PipelineConfig{}; }

}  // namespace

TEST(Segmentation, OneSentencePerDelimiter) {
  EXPECT_EQ(texts(segment_sentences("A b. C d? E!", bare())), (std::vector<std::string>{"A b.", "C d?", "E!"}));
}

TEST(Segmentation, UrlPeriodsDoNotSplit) {
  const auto s = segment_sentences("Voir http://www.lia.univ-avignon.fr demain.", bare());
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].text, "Voir http://www.lia.univ-avignon.fr demain.");
}

TEST(Segmentation, EmailPeriodsDoNotSplit) {
  EXPECT_EQ(segment_sentences("Write to jean.dupont@lia.fr today. Thanks.", bare()).size(), 2u);
}

TEST(Segmentation, ColonAndLineBreakAreDelimiters) {
  EXPECT_EQ(texts(segment_sentences("x: y.\nz.", bare())), (std::vector<std::string>{"x:", "y.", "z."}));
}

TEST(Segmentation, DecimalPointDoesNotSplit) {
  EXPECT_EQ(segment_sentences("It costs 3.5 euros. Cheap.", bare()).size(), 2u);
}

TEST(Segmentation, DelimiterSetIsConfigurable) {
  PipelineConfig c;
  c.sentence_delimiters = U".";
  EXPECT_EQ(segment_sentences("x: y.\nz.", c).size(), 2u);
}

TEST(Segmentation, EmptyBody) { EXPECT_TRUE(segment_sentences("", bare()).empty()); }

TEST(Segmentation, SpansAreOrderedAndContiguous) {
  Gen gen(7);
  const std::string pieces[] = {"word", " ", ". ", "?", "!", ":", "\n", "http://a.b.c/x", "a.b@c.de", "3.14", "(x.y)", "\xC3\xA9t\xC3\xA9"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string body;
    for (std::size_t k = 0, n = gen.uniform(0, 40); k < n; ++k) body += pieces[gen.uniform(0, std::size(pieces) - 1)];
    const auto spans = segment_sentences(body, bare());
    std::size_t prev_end = 0;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      EXPECT_LT(spans[i].begin, spans[i].end);
      if (i > 0) EXPECT_EQ(spans[i].begin, prev_end) << body;
      prev_end = spans[i].end;
      EXPECT_NE(body.substr(spans[i].begin, spans[i].end - spans[i].begin).find(spans[i].text), std::string::npos);
    }
    if (!spans.empty()) EXPECT_LE(spans.back().end, body.size());
  }
}

TEST(Title, CapitalizedFirstLine) {
  const auto t = detect_title("INFORMATIQUE ET PUCES.\nEt si l'ordinateur pouvait fonctionner ?", bare());
  EXPECT_EQ(t.text, "INFORMATIQUE ET PUCES");
  EXPECT_EQ(t.rule, TitleRule::capitalized);
}

TEST(Title, LineBreakAfterFirstSentence) {
  const auto t = detect_title("Hello world.\nMore text.", bare());
  EXPECT_EQ(t.text, "Hello world");
  EXPECT_EQ(t.rule, TitleRule::carriage_return);
}

TEST(Title, ShortFirstSentence) {
  const auto t = detect_title("Cats sleep a lot. They also eat.", bare());
  EXPECT_EQ(t.text, "Cats sleep a lot");
  EXPECT_EQ(t.rule, TitleRule::first_sentence);
  EXPECT_EQ(t.body_offset, 0u);
}

TEST(Title, FallbackFirstTenWords) {
  std::string body;
  for (int i = 0; i < 40; ++i) body += "w" + std::to_string(i) + " ";
  const auto t = detect_title(body, bare());
  EXPECT_EQ(t.rule, TitleRule::fallback);
  EXPECT_EQ(t.text, "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9");
}

TEST(Title, CapitalizedTitleIsRemovedFromBody) {
  const auto doc = testing_support::puces();
  EXPECT_EQ(doc.title_rule, TitleRule::capitalized);
  ASSERT_FALSE(doc.titles.empty());
  EXPECT_EQ(doc.titles[0].text, "INFORMATIQUE ET PUCES");
  EXPECT_EQ(doc.raw_sentences[0].rfind("Et si l'ordinateur", 0), 0u);
}

TEST(Tokenizer, ApostropheSplitsAndParenthesesDrop) {
  const auto toks = tokenize("l'équipe (voir plus bas) avance; sous-marin!", true);
  std::vector<std::string> words;
  for (const auto& t : toks) words.push_back(t.text);
  EXPECT_EQ(words, (std::vector<std::string>{"l", "équipe", "avance", "sous-marin"}));
}

TEST(Tokenizer, ParenthesesKeptWhenDisabled) {
  EXPECT_EQ(tokenize("a (b) c", false).size(), 3u);
}

TEST(Normalize, LemmaThenStem) {
  const auto c = testing_support::french();
  EXPECT_EQ(normalize_term("chantaient", c), "chant");
  EXPECT_EQ(normalize_term("chanté", c), "chant");
  EXPECT_EQ(normalize_term("chanteront", c), "chant");
}

TEST(Normalize, CompoundBecomesOneTerm) {
  const auto c = testing_support::french();
  EXPECT_EQ(normalize_term("pommes de terre", c), "pomme_de_terre");
  EXPECT_EQ(extract_terms("Des pommes de terre cuites.", c), (std::vector<std::string>{"pomme_de_terre", "cuit"}));
}

TEST(Normalize, StoplistedExpression) {
  const auto c = testing_support::french();
  EXPECT_EQ(normalize_term("par exemple", c), std::nullopt);
  EXPECT_EQ(extract_terms("par exemple", c), std::vector<std::string>{});
}

TEST(Normalize, FunctionWordsGatedByFlag) {
  auto c = testing_support::french();
  EXPECT_EQ(normalize_term("les", c), std::nullopt);
  c.delete_function_words = false;
  EXPECT_TRUE(normalize_term("les", c).has_value());
}

TEST(Normalize, NumbersFollowPreset) {
  auto c = testing_support::french();
  EXPECT_EQ(normalize_term("213", c), std::nullopt);
  EXPECT_EQ(normalize_term("cinq", c), std::nullopt);
  c.apply_preset(ModePreset::qa);
  EXPECT_EQ(normalize_term("213", c), "213");
}

TEST(Normalize, AddressesKeptWhole) {
  EXPECT_EQ(normalize_term("http://www.lia.univ-avignon.fr", bare()), "http://www.lia.univ-avignon.fr");
}

TEST(Normalize, DeterministicAndTotal) {
  const auto c = testing_support::french();
  Gen gen(11);
  const std::string alphabet[] = {"a", "e", "é", "s", "x", "ment", "er", "aux", "-", "'", "1", "Z", "ç"};
  for (int i = 0; i < 2000; ++i) {
    std::string tok;
    for (std::size_t k = 0, n = gen.uniform(0, 8); k < n; ++k) tok += alphabet[gen.uniform(0, std::size(alphabet) - 1)];
    const auto a = normalize_term(tok, c);
    EXPECT_EQ(a, normalize_term(tok, c));
    if (a) EXPECT_FALSE(a->empty());
  }
}

TEST(Preprocess, PucesCounts) {
  const auto doc = testing_support::puces();
  const auto c = doc.counts();
  EXPECT_EQ(c.words, 605u);
  EXPECT_EQ(c.sentences, 30u);
  EXPECT_EQ(c.titles, 1u);
  EXPECT_LE(c.terms, c.words);
  EXPECT_LE(c.distinct_words, c.words);
}

TEST(Preprocess, ToyDocument) {
  const auto doc = preprocess({"aa bb. aa cc.", "utf-8", "toy"}, bare());
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc.sentence_terms(0), (std::vector<std::string>{"aa", "bb"}));
  EXPECT_EQ(doc.sentence_terms(1), (std::vector<std::string>{"aa", "cc"}));
  EXPECT_EQ(doc.counts().words, 4u);
  EXPECT_EQ(doc.counts().distinct_words, 3u);
}

TEST(Preprocess, EmptyBody) {
  const auto doc = preprocess({"   \n ", "utf-8", "empty"}, bare());
  const auto c = doc.counts();
  EXPECT_EQ(c.sentences, 0u);
  EXPECT_EQ(c.words, 0u);
  EXPECT_EQ(c.terms, 0u);
}

TEST(Preprocess, InvariantsOnPuces) {
  const auto doc = testing_support::puces();
  EXPECT_EQ(doc.sentences.size(), doc.raw_sentences.size());
  EXPECT_EQ(doc.sentences.size(), doc.sentence_words.size());
  for (const auto& s : doc.sentences)
    for (TermId id : s) EXPECT_LT(id, doc.term_table.size());
}

TEST(Preprocess, Deterministic) {
  const auto a = testing_support::puces();
  const auto b = testing_support::puces();
  EXPECT_EQ(a.sentences, b.sentences);
  EXPECT_EQ(a.term_table, b.term_table);
  EXPECT_EQ(render_structured(a), render_structured(b));
}

TEST(Preprocess, Latin1Input) {
  const std::string latin1 = "Caf\xE9 noir. Caf\xE9 cr\xE8me.";
  const auto doc = preprocess({latin1, "latin1", "l1"}, bare());
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc.raw_sentences[0], "Caf\xC3\xA9 noir.");
}

TEST(Preprocess, InvalidUtf8IsRejected) {
  EXPECT_THROW(preprocess({"abc \xFF\xFE def.", "utf-8", "bad"}, bare()), EncodingError);
  EXPECT_THROW(preprocess({"abc.", "ebcdic", "bad"}, bare()), EncodingError);
}

TEST(Preprocess, StructuredInput) {
  const std::string xml =
      "<?xml version=\"1.0\" encoding=\"UTF-8\" ?>\n<Texte Title=\"Les puces\">\n"
      "  <S>Les puces piquent.</S>\n  <Subtitle_1>Les poux</Subtitle_1>\n  <S>Les poux aussi &amp; encore.</S>\n</Texte>\n";
  const auto doc = preprocess({xml, "utf-8", "x"}, testing_support::french());
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc.title_rule, TitleRule::explicit_markup);
  ASSERT_EQ(doc.titles.size(), 2u);
  EXPECT_EQ(doc.titles[1].level, 1);
  EXPECT_EQ(doc.sentence_section[0], std::nullopt);
  EXPECT_EQ(doc.sentence_section[1], 1u);
  EXPECT_EQ(doc.raw_sentences[1], "Les poux aussi & encore.");
}

TEST(Preprocess, RenderedOutputReparsesToSameTerms) {
  const auto c = testing_support::french();
  const auto doc = testing_support::puces();
  const auto again = preprocess({render_structured(doc), "utf-8", doc.source_id}, c);
  ASSERT_EQ(again.size(), doc.size());
  for (std::size_t s = 0; s < doc.size(); ++s) EXPECT_EQ(again.sentence_terms(s), doc.sentence_terms(s));
  ASSERT_FALSE(again.titles.empty());
  EXPECT_EQ(again.titles[0].text, doc.titles[0].text);
}

TEST(Config, Validation) {
  PipelineConfig c;
  c.sentence_delimiters.clear();
  EXPECT_THROW(c.validate(), ConfigError);
  PipelineConfig d;
  d.compounds = {{"solo"}};
  EXPECT_THROW(d.validate(), ConfigError);
}

TEST(Stemmer, RulesMustShorten) {
  EXPECT_THROW(SuffixStemmer({{1, "a", "ab", 1}}), ConfigError);
  EXPECT_THROW(SuffixStemmer({{1, "", "", 1}}), ConfigError);
}

TEST(Stemmer, TerminatesAndNeverGrows) {
  const SuffixStemmer fr(french_suffix_rules());
  const SuffixStemmer en(english_suffix_rules());
  Gen gen(3);
  const std::string parts[] = {"e", "s", "ment", "ation", "aux", "er", "ies", "ing", "é", "x", "ness", "al"};
  for (int i = 0; i < 3000; ++i) {
    std::string w;
    for (std::size_t k = 0, n = gen.uniform(0, 6); k < n; ++k) w += parts[gen.uniform(0, std::size(parts) - 1)];
    EXPECT_LE(fr.stem(w).size(), w.size());
    EXPECT_LE(en.stem(w).size(), w.size());
  }
}

TEST(Stemmer, Examples) {
  const SuffixStemmer fr(french_suffix_rules());
  EXPECT_EQ(fr.stem("chanter"), "chant");
  EXPECT_EQ(fr.stem("chevaux"), "cheval");
  const SuffixStemmer en(english_suffix_rules());
  EXPECT_EQ(en.stem("cars"), "car");
  EXPECT_EQ(en.stem("studies"), "studi");
}
