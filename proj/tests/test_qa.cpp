#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace cortex;
using testing_support::data_path;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("cortex_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

struct QaCorpus {
  PipelineConfig config = testing_support::english_qa();
  std::vector<PreprocessedDocument> docs;
  Thesaurus thesaurus;
  std::vector<Question> questions;
  std::map<std::string, std::vector<std::string>> gold;

  QaCorpus() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(data_path("qa/docs"))) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) docs.push_back(preprocess(load_document(f), config));
    thesaurus = load_thesaurus(data_path("qa/thesaurus.tsv"), config);
    questions = load_questions(data_path("qa/questions.tsv"));
    gold = load_gold(data_path("qa/gold.tsv"));
  }

  std::vector<QaJudgement> run(SummaryMode mode) const {
    const auto index = SentenceIndex::build(docs);
    QaOptions opt;
    opt.mode = mode;
    std::vector<QaJudgement> out;
    for (const auto& q : questions)
      out.push_back(judge(answer_question(docs, index, q.id, q.text, thesaurus, config, opt), gold.at(q.id)));
    return out;
  }
};

}  // namespace

TEST(Resources, BundledFiles) {
  const QaCorpus c;
  EXPECT_EQ(c.docs.size(), 6u);
  EXPECT_EQ(c.questions.size(), 5u);
  EXPECT_EQ(c.questions[0].id, "1");
  EXPECT_EQ(c.gold.size(), 5u);
  EXPECT_EQ(c.gold.at("2").size(), 2u);
  EXPECT_FALSE(c.thesaurus.lookup(normalize_term("tall", c.config).value()).empty());
}

TEST(Resources, FrenchResources) {
  const auto fr = testing_support::french();
  EXPECT_TRUE(fr.stoplist.contains("le"));
  EXPECT_FALSE(fr.lemma_table.empty());
  EXPECT_FALSE(fr.compounds.empty());
}

TEST(Resources, ThesaurusWeightsAndErrors) {
  const auto c = testing_support::english_qa();
  const auto ok = load_thesaurus(temp_file("th_ok.tsv", "# comment\nbig\tlarge:0.5,huge\n"), c);
  const auto syn = ok.lookup(normalize_term("big", c).value());
  ASSERT_EQ(syn.size(), 2u);
  EXPECT_EQ(syn[0].weight, 0.5);
  EXPECT_EQ(syn[1].weight, 1.0);
  EXPECT_THROW(load_thesaurus(temp_file("th_bad.tsv", "big large\n"), c), ConfigError);
  EXPECT_THROW(load_thesaurus(temp_file("th_w.tsv", "big\tlarge:x\n"), c), ConfigError);
}

TEST(Resources, CompoundsNeedTwoWords) {
  EXPECT_EQ(load_compounds(temp_file("cp_ok.txt", "chemin de fer\n")).size(), 1u);
  EXPECT_THROW(load_compounds(temp_file("cp_bad.txt", "seul\n")), ConfigError);
}

TEST(Resources, InvalidUtf8Rejected) {
  EXPECT_THROW(load_stoplist(temp_file("bad_utf8.txt", "ok\n\xff\xfe\n")), Error);
}

TEST(Resources, QuestionsWithInlineAnswers) {
  const auto q = load_questions(temp_file("q.tsv", "What?\tA|B\n\nWhy?\n"));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0].answers, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(q[1].id, "2");
  EXPECT_TRUE(q[1].answers.empty());
}

TEST(Resources, UnknownLanguage) {
  EXPECT_THROW(stemmer_for("xx"), ConfigError);
  EXPECT_THROW(load_language(data_path("nowhere"), "en"), ConfigError);
}

TEST(Qa, PersonalizedAnswersBundledQuestions) {
  const QaCorpus c;
  const auto j = c.run(SummaryMode::personalized);
  for (const auto& x : j) {
    EXPECT_TRUE(x.answered) << x.question;
    EXPECT_TRUE(x.top_correct) << x.question;
  }
  EXPECT_EQ(cws(std::span<const QaJudgement>(j)), 1.0);
}

TEST(Qa, PersonalizedAtLeastAsGoodAsGeneric) {
  const QaCorpus c;
  const auto p = c.run(SummaryMode::personalized), g = c.run(SummaryMode::generic);
  EXPECT_GE(cws(std::span<const QaJudgement>(p)), cws(std::span<const QaJudgement>(g)));
}

TEST(Qa, CandidatesComeFromSelectedDocuments) {
  const QaCorpus c;
  const auto index = SentenceIndex::build(c.docs);
  for (SummaryMode mode : {SummaryMode::generic, SummaryMode::personalized}) {
    QaOptions opt;
    opt.mode = mode;
    opt.documents = 2;
    for (const auto& q : c.questions) {
      const auto a = answer_question(c.docs, index, q.id, q.text, c.thesaurus, c.config, opt);
      EXPECT_LE(a.documents.size(), 2u);
      for (const auto& cand : a.candidates)
        EXPECT_NE(std::find(a.documents.begin(), a.documents.end(), cand.document), a.documents.end());
      for (std::size_t k = 1; k < a.candidates.size(); ++k) EXPECT_GE(a.candidates[k - 1].score, a.candidates[k].score);
    }
  }
}

TEST(Qa, UnanswerableQuestion) {
  const QaCorpus c;
  const auto index = SentenceIndex::build(c.docs);
  const auto a = answer_question(c.docs, index, "x", "Xylophone quokka?", c.thesaurus, c.config, QaOptions{});
  EXPECT_FALSE(a.answered());
  EXPECT_FALSE(a.diagnostics.empty());
  const auto stop = answer_question(c.docs, index, "y", "Who is the?", c.thesaurus, c.config, QaOptions{});
  EXPECT_FALSE(stop.answered());
  QaOptions zero;
  zero.documents = 0;
  EXPECT_THROW(answer_question(c.docs, index, "z", "tower", c.thesaurus, c.config, zero), ConfigError);
}

TEST(Qa, Judge) {
  QaAnswer a;
  a.question = "1";
  a.candidates = {{"d", 0, "It is tall.", 0.9}, {"d", 1, "It is 330 metres tall.", 0.7}};
  const std::vector<std::string> gold = {"330 metres"};
  const auto j = judge(a, gold);
  EXPECT_TRUE(j.answered);
  EXPECT_FALSE(j.top_correct);
  EXPECT_TRUE(j.found);
  EXPECT_EQ(j.confidence, 0.9);
  const auto none = judge(QaAnswer{}, gold);
  EXPECT_FALSE(none.answered);
  EXPECT_FALSE(none.found);
}
