#pragma once

// Generic and query-personalized extractive summaries.
//
// Generic mode scores every sentence with the ten metrics against the document
// title. The personalized mode replaces the title by the expanded query vector,
// votes with F and theta only, condenses each document separately and finally
// re-scores the pooled sentences against each other so they share one scale.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cortex/decision.hpp"
#include "cortex/error.hpp"
#include "cortex/lexmatrix.hpp"
#include "cortex/metrics.hpp"
#include "cortex/text_pipeline.hpp"

namespace cortex {

struct Synonym {
  std::string term;
  double weight = 1.0;
};

/// Normalized head term -> normalized synonyms.
class Thesaurus {
 public:
  explicit Thesaurus(std::size_t max_expansion = 2) : max_expansion_(max_expansion) {}

  /// Adds an entry given in surface form; head and synonyms go through `config`.
  void add(std::string_view head, const std::vector<std::pair<std::string, double>>& synonyms,
           const PipelineConfig& config) {
    const auto h = normalize_term(head, config);
    if (!h) return;
    auto& list = entries_[*h];
    for (const auto& [surface, weight] : synonyms) {
      const auto s = normalize_term(surface, config);
      if (!s || *s == *h) continue;
      const bool known = std::any_of(list.begin(), list.end(), [&](const Synonym& x) { return x.term == *s; });
      if (!known) list.push_back({*s, weight});
    }
  }

  /// At most `max_expansion` synonyms of `term`, in file order.
  std::vector<Synonym> lookup(const std::string& term) const {
    const auto it = entries_.find(term);
    if (it == entries_.end()) return {};
    std::vector<Synonym> out(it->second.begin(),
                             it->second.begin() + static_cast<std::ptrdiff_t>(std::min(max_expansion_, it->second.size())));
    return out;
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t max_expansion() const { return max_expansion_; }

 private:
  std::size_t max_expansion_;
  std::map<std::string, std::vector<Synonym>> entries_;
};

struct QueryTerm {
  std::string term;
  double weight = 1.0;
  friend bool operator==(const QueryTerm&, const QueryTerm&) = default;
};

struct Query {
  std::string original;
  std::vector<std::string> terms;  // normalized question terms, with repetitions
  std::vector<QueryTerm> expanded;  // distinct terms after expansion, sorted

  bool contains(const std::string& term) const {
    return std::binary_search(expanded.begin(), expanded.end(), QueryTerm{term, 0.0},
                              [](const QueryTerm& a, const QueryTerm& b) { return a.term < b.term; });
  }

  std::vector<std::string> expanded_terms() const {
    std::vector<std::string> out;
    for (const auto& t : expanded) out.push_back(t.term);
    return out;
  }
};

namespace detail {

inline void merge_term(std::map<std::string, double>& acc, const std::string& term, double weight) {
  auto [it, fresh] = acc.try_emplace(term, weight);
  if (!fresh) it->second = std::max(it->second, weight);
}

inline Query finish_query(std::string text, std::vector<std::string> terms, const std::map<std::string, double>& acc) {
  Query q{std::move(text), std::move(terms), {}};
  for (const auto& [term, weight] : acc) q.expanded.push_back({term, weight});
  return q;
}

}  // namespace detail

/// The question run through the document pipeline, without expansion.
inline Query make_query(std::string_view text, const PipelineConfig& config) {
  auto terms = extract_terms(text, config);
  if (terms.empty()) throw DomainError("question has no searchable term after filtering");
  std::map<std::string, double> acc;
  for (const auto& t : terms) detail::merge_term(acc, t, 1.0);
  return detail::finish_query(std::string(text), std::move(terms), acc);
}

/// Normalizes the question and unions every term with its thesaurus synonyms.
inline Query expand_query(std::string_view text, const Thesaurus& thesaurus, const PipelineConfig& config) {
  auto terms = extract_terms(text, config);
  if (terms.empty()) throw DomainError("question has no searchable term after filtering");
  std::map<std::string, double> acc;
  for (const auto& t : terms) detail::merge_term(acc, t, 1.0);
  for (const auto& t : terms)
    for (const auto& syn : thesaurus.lookup(t)) detail::merge_term(acc, syn.term, syn.weight);
  return detail::finish_query(std::string(text), std::move(terms), acc);
}

/// Query weights over a document lexicon; terms outside the lexicon are dropped.
inline std::vector<double> query_vector(const Query& q, const Lexicon& lex) {
  std::vector<double> v(lex.size(), 0.0);
  for (const auto& t : q.expanded)
    if (const auto id = lex.find(t.term)) v[*id] = t.weight;
  return v;
}

/// Everything computed for one document on the way to its decision scores.
struct DocumentScores {
  Lexicon lexicon;
  TermMatrix matrix;
  MetricTable metrics;
  NormalizedTable normalized;
  std::vector<DecisionScore> scores;
};

inline DocumentScores score_document(const PreprocessedDocument& doc, std::span<const Metric> active = kAllMetrics) {
  DocumentScores r;
  r.lexicon = build_lexicon(doc);
  r.matrix = build_matrices(doc, r.lexicon);
  r.metrics = compute_metrics(r.matrix, title_references(doc, r.matrix), active);
  r.normalized = normalize(r.metrics);
  r.scores = decide(r.normalized);
  return r;
}

/// Scores `doc` with the query vector standing in for every title.
inline DocumentScores score_document(const PreprocessedDocument& doc, const Query& q,
                                     std::span<const Metric> active = kPersonalizedMetrics) {
  DocumentScores r;
  r.lexicon = build_lexicon(doc);
  r.matrix = build_matrices(doc, r.lexicon);
  r.metrics = compute_metrics(r.matrix, AngleReferences::single(query_vector(q, r.lexicon), doc.size()), active);
  r.normalized = normalize(r.metrics);
  r.scores = decide(r.normalized);
  return r;
}

enum class SummaryMode { generic, personalized };

inline std::string_view to_string(SummaryMode m) { return m == SummaryMode::generic ? "generic" : "personalized"; }

struct SummaryEntry {
  std::string document;
  std::size_t sentence = 0;
  std::string text;
  double local_score = 0.0;
  std::optional<double> global_score;
  std::vector<std::string> terms;  // normalized terms, kept for re-ranking
};

struct Summary {
  SummaryMode mode = SummaryMode::generic;
  CompressionSpec spec;
  std::vector<SummaryEntry> entries;
  std::vector<Metric> local_metrics;   // metrics that voted for the local scores
  std::vector<Metric> global_metrics;  // metrics that voted for the global scores, if re-ranked
  std::vector<std::string> diagnostics;

  std::vector<std::size_t> sentence_indices() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries) out.push_back(e.sentence);
    return out;
  }
};

namespace detail {

inline bool entry_before(const SummaryEntry& a, const SummaryEntry& b, double sa, double sb) {
  if (sa != sb) return sa > sb;
  if (a.document != b.document) return a.document < b.document;
  return a.sentence < b.sentence;
}

}  // namespace detail

/// Generic extract of one document, in document order.
inline Summary summarize_generic(const PreprocessedDocument& doc, const CompressionSpec& spec) {
  spec.validate();
  Summary out;
  out.mode = SummaryMode::generic;
  out.spec = spec;
  out.local_metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
  if (doc.size() == 0) {
    out.diagnostics.push_back(doc.source_id + ": no sentences");
    return out;
  }
  const DocumentScores r = score_document(doc);
  for (std::size_t s : select(r.scores, doc.sentence_words, spec))
    out.entries.push_back({doc.source_id, s, doc.raw_sentences[s], r.scores[s].score, std::nullopt, doc.sentence_terms(s)});
  return out;
}

/// Per-document query-biased extracts pooled into one summary, ordered by local score.
inline Summary summarize_personalized(std::span<const PreprocessedDocument> docs, const Query& q,
                                      const CompressionSpec& spec) {
  spec.validate();
  Summary out;
  out.mode = SummaryMode::personalized;
  out.spec = spec;
  out.local_metrics.assign(kPersonalizedMetrics.begin(), kPersonalizedMetrics.end());
  for (const auto& doc : docs) {
    if (doc.size() == 0) continue;
    const DocumentScores r = score_document(doc, q);
    const auto& angle = r.metrics.column(Metric::title_angle);
    if (std::all_of(angle.begin(), angle.end(), [](double v) { return v == 0.0; }))
      out.diagnostics.push_back(doc.source_id + ": no sentence shares a term with the query; ranked by frequency only");
    for (std::size_t s : select(r.scores, doc.sentence_words, spec))
      out.entries.push_back({doc.source_id, s, doc.raw_sentences[s], r.scores[s].score, std::nullopt, doc.sentence_terms(s)});
  }
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const SummaryEntry& a, const SummaryEntry& b) {
    return detail::entry_before(a, b, a.local_score, b.local_score);
  });
  return out;
}

/// A document assembled from term lists; raw sentence text is the joined terms.
inline PreprocessedDocument make_document(std::string source_id, const std::vector<std::vector<std::string>>& sentences,
                                          const std::vector<std::string>& title = {}) {
  PreprocessedDocument doc;
  doc.source_id = std::move(source_id);
  std::unordered_map<std::string, TermId> ids;
  auto intern = [&](const std::vector<std::string>& terms) {
    std::vector<TermId> out;
    for (const auto& t : terms) {
      auto [it, fresh] = ids.try_emplace(t, static_cast<TermId>(doc.term_table.size()));
      if (fresh) doc.term_table.push_back(t);
      out.push_back(it->second);
    }
    return out;
  };
  if (!title.empty()) {
    std::string text;
    for (const auto& t : title) text += (text.empty() ? "" : " ") + t;
    doc.titles.push_back({0, std::move(text), intern(title)});
    doc.title_rule = TitleRule::explicit_markup;
  }
  for (const auto& s : sentences) {
    std::string text;
    for (const auto& t : s) text += (text.empty() ? "" : " ") + t;
    doc.sentences.push_back(intern(s));
    doc.sentence_words.push_back(s.size());
    doc.raw_sentences.push_back(std::move(text));
    doc.sentence_section.push_back(std::nullopt);
  }
  return doc;
}

/// Re-scores the pooled sentences of a personalized summary as one document made
/// of their query terms only, with all ten metrics and the query as title.
inline Summary rerank_global(Summary s, const Query& q) {
  std::vector<std::vector<std::string>> filtered;
  bool any_term = false;
  for (const auto& e : s.entries) {
    std::vector<std::string> kept;
    for (const auto& t : e.terms)
      if (q.contains(t)) kept.push_back(t);
    any_term = any_term || !kept.empty();
    filtered.push_back(std::move(kept));
  }
  s.global_metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
  if (!any_term) {
    for (auto& e : s.entries) e.global_score = e.local_score;
    s.diagnostics.push_back("re-ranking: no query term left in the selected sentences; global scores copy local scores");
  } else {
    const PreprocessedDocument synthetic = make_document("rerank", filtered, q.expanded_terms());
    const DocumentScores r = score_document(synthetic, q, kAllMetrics);
    for (std::size_t i = 0; i < s.entries.size(); ++i) s.entries[i].global_score = r.scores[i].score;
  }
  std::stable_sort(s.entries.begin(), s.entries.end(), [](const SummaryEntry& a, const SummaryEntry& b) {
    return detail::entry_before(a, b, *a.global_score, *b.global_score);
  });
  return s;
}

}  // namespace cortex
