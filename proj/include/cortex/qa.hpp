#pragma once

// Question answering over summaries: candidate documents come from the sentence
// index, each is condensed (generic or query-personalized) and the surviving
// sentences are the candidate answers.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cortex/evaluation.hpp"
#include "cortex/retrieval.hpp"
#include "cortex/summarizer.hpp"

namespace cortex {

struct QaOptions {
  SummaryMode mode = SummaryMode::personalized;
  CompressionSpec spec{30.0, CompressionUnit::sentences};
  std::size_t documents = 3;  // R_D
};

struct Candidate {
  std::string document;
  std::size_t sentence = 0;
  std::string text;
  double score = 0.0;  // cosine for generic summaries, global score for personalized ones
};

struct QaAnswer {
  std::string question;
  std::vector<std::string> documents;  // selected by retrieval, best first
  std::vector<Candidate> candidates;   // best first
  std::vector<std::string> diagnostics;

  bool answered() const { return !candidates.empty(); }
  double confidence() const { return candidates.empty() ? 0.0 : candidates.front().score; }
};

namespace detail {

inline std::vector<Candidate> generic_candidates(std::span<const PreprocessedDocument> docs,
                                                 std::span<const std::size_t> selected, const SentenceIndex& index,
                                                 const Query& q, const CompressionSpec& spec) {
  std::map<std::pair<std::size_t, std::size_t>, double> cosine;
  for (const auto& r : index.rank(q)) cosine[{r.document_index, r.sentence}] = r.score;
  std::vector<std::pair<std::size_t, Candidate>> pool;
  for (std::size_t d : selected) {
    const Summary s = summarize_generic(docs[d], spec);
    for (const auto& e : s.entries) {
      const auto it = cosine.find({d, e.sentence});
      pool.push_back({d, {e.document, e.sentence, e.text, it == cosine.end() ? 0.0 : it->second}});
    }
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    if (a.second.score != b.second.score) return a.second.score > b.second.score;
    if (a.second.document != b.second.document) return a.second.document < b.second.document;
    if (a.first != b.first) return a.first < b.first;
    return a.second.sentence < b.second.sentence;
  });
  std::vector<Candidate> out;
  for (auto& [d, c] : pool) out.push_back(std::move(c));
  return out;
}

}  // namespace detail

/// Answers one question. Retrieval always uses the question as asked; the
/// thesaurus only enters the personalized summaries.
inline QaAnswer answer_question(std::span<const PreprocessedDocument> docs, const SentenceIndex& index,
                                const std::string& question_id, std::string_view question, const Thesaurus& thesaurus,
                                const PipelineConfig& config, const QaOptions& options) {
  options.spec.validate();
  if (options.documents == 0) throw ConfigError("the number of documents per question must be positive");
  QaAnswer a;
  a.question = question_id;
  Query plain;
  try {
    plain = make_query(question, config);
  } catch (const DomainError& e) {
    a.diagnostics.push_back(e.what());
    return a;
  }
  const auto selected = index.select_documents(plain, options.documents);
  if (selected.empty()) {
    a.diagnostics.push_back("no document shares a term with the question");
    return a;
  }
  for (std::size_t d : selected) a.documents.push_back(index.document(d));

  if (options.mode == SummaryMode::generic) {
    a.candidates = detail::generic_candidates(docs, selected, index, plain, options.spec);
    return a;
  }
  const Query q = expand_query(question, thesaurus, config);
  std::vector<PreprocessedDocument> chosen;
  for (std::size_t d : selected) chosen.push_back(docs[d]);
  Summary s = rerank_global(summarize_personalized(chosen, q, options.spec), q);
  a.diagnostics = s.diagnostics;
  for (const auto& e : s.entries) a.candidates.push_back({e.document, e.sentence, e.text, e.global_score.value_or(e.local_score)});
  return a;
}

struct QaJudgement {
  std::string question;
  bool answered = false;
  bool top_correct = false;    // best candidate holds a gold answer
  bool found = false;          // some candidate holds a gold answer
  double confidence = 0.0;
};

inline QaJudgement judge(const QaAnswer& a, std::span<const std::string> gold, bool exact = false) {
  QaJudgement j{a.question, a.answered(), false, false, a.confidence()};
  for (std::size_t k = 0; k < a.candidates.size(); ++k) {
    if (!answer_matches(a.candidates[k].text, gold, exact)) continue;
    j.found = true;
    if (k == 0) j.top_correct = true;
  }
  return j;
}

/// CWS over judged answers, most confident first and unanswered questions last.
inline double cws(std::span<const QaJudgement> judgements) {
  std::vector<AnswerRecord> records;
  for (const auto& j : judgements) records.push_back({j.question, j.confidence, j.top_correct, j.answered});
  order_by_confidence(records);
  return cws(std::span<const AnswerRecord>(records));
}

}  // namespace cortex
