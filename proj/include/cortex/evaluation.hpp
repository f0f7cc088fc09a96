#pragma once

// Evaluation measures: confidence-weighted score, judge-weighted extract quality,
// precision/recall, metric sensitivity statistics and the sentence-order
// invariance check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cortex/decision.hpp"
#include "cortex/error.hpp"
#include "cortex/summarizer.hpp"
#include "cortex/text_pipeline.hpp"

namespace cortex {

struct AnswerRecord {
  std::string question;
  double confidence = 0.0;
  bool correct = false;
  bool answered = true;
};

/// Most confident first, ties by question id; unanswered questions go last.
inline void order_by_confidence(std::vector<AnswerRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const AnswerRecord& a, const AnswerRecord& b) {
    if (a.answered != b.answered) return a.answered;
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return a.question < b.question;
  });
}

/// CWS = (1/Q) sum_i (correct among the first i) / i, over records in the given order.
inline double cws(std::span<const AnswerRecord> ordered) {
  if (ordered.empty()) throw DomainError("CWS of an empty answer list");
  double sum = 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i].correct) ++correct;
    sum += static_cast<double>(correct) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(ordered.size());
}

struct ReferenceExtract {
  std::set<std::size_t> sentences;
  /// Fraction of judges who selected each sentence; empty means weight 1 for every reference sentence.
  std::vector<double> weights;

  double weight(std::size_t s) const {
    if (weights.empty()) return sentences.contains(s) ? 1.0 : 0.0;
    return s < weights.size() ? weights[s] : 0.0;
  }
};

struct Quality {
  double raw = 0.0;
  double normalized = 0.0;
};

/// Judge mass of extract sentences that are in the reference, over the reference's own mass.
inline Quality quality(const std::set<std::size_t>& extract, const ReferenceExtract& ref) {
  for (double w : ref.weights)
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("judge weights must lie in [0, 1]");
  Quality q;
  for (std::size_t s : extract)
    if (ref.sentences.contains(s)) q.raw += ref.weight(s);
  double best = 0.0;
  for (std::size_t s : ref.sentences) best += ref.weight(s);
  q.normalized = best > 0.0 ? std::min(1.0, q.raw / best) : 0.0;
  return q;
}

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  bool precision_defined = true;  // false for an empty extract
};

inline PrecisionRecall precision_recall(const std::set<std::size_t>& extract, const std::set<std::size_t>& reference) {
  if (reference.empty()) throw DomainError("precision/recall against an empty reference");
  std::size_t hit = 0;
  for (std::size_t s : extract) hit += reference.contains(s) ? 1 : 0;
  PrecisionRecall pr;
  pr.recall = static_cast<double>(hit) / static_cast<double>(reference.size());
  if (extract.empty())
    pr.precision_defined = false;
  else
    pr.precision = static_cast<double>(hit) / static_cast<double>(extract.size());
  return pr;
}

struct Sensitivity {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::optional<double> kappa_plus;   // mean of the values above 0.5
  std::optional<double> kappa_minus;  // mean of the values below 0.5
  double advantaged = 0.0;     // fraction above 0.5
  double disadvantaged = 0.0;  // fraction below 0.5
  double neutral = 0.0;        // fraction exactly 0.5
  std::vector<std::size_t> histogram;  // equal-width bins over [0, 1]
};

inline Sensitivity sensitivity(std::string name, std::span<const double> values, std::size_t bins = 20) {
  if (bins == 0) throw ConfigError("histogram needs at least one bin");
  Sensitivity s;
  s.name = std::move(name);
  s.count = values.size();
  s.histogram.assign(bins, 0);
  if (values.empty()) return s;
  double sum = 0.0, up = 0.0, down = 0.0;
  std::size_t n_up = 0, n_down = 0, n_mid = 0;
  for (double v : values) {
    sum += v;
    if (v > kNeutral) {
      up += v;
      ++n_up;
    } else if (v < kNeutral) {
      down += v;
      ++n_down;
    } else {
      ++n_mid;
    }
    const auto bin = static_cast<std::size_t>(std::clamp(v, 0.0, 1.0) * static_cast<double>(bins));
    ++s.histogram[std::min(bin, bins - 1)];
  }
  const double n = static_cast<double>(values.size());
  s.mean = sum / n;
  double var = 0.0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(var / n);
  if (n_up) s.kappa_plus = up / static_cast<double>(n_up);
  if (n_down) s.kappa_minus = down / static_cast<double>(n_down);
  s.advantaged = static_cast<double>(n_up) / n;
  s.disadvantaged = static_cast<double>(n_down) / n;
  s.neutral = static_cast<double>(n_mid) / n;
  return s;
}

struct SensitivityReport {
  std::vector<Sensitivity> metrics;
  Sensitivity decision;
  std::size_t sentences = 0;
  std::size_t bins = 0;
};

/// Pools normalized values per metric over a corpus, plus the decision scores they produce.
inline SensitivityReport sensitivity_report(std::span<const NormalizedTable> tables, std::size_t bins = 20) {
  std::vector<Metric> order;
  std::map<Metric, std::vector<double>> pooled;
  std::vector<double> decisions;
  for (const auto& t : tables) {
    for (std::size_t k = 0; k < t.metrics.size(); ++k) {
      if (!pooled.contains(t.metrics[k])) order.push_back(t.metrics[k]);
      auto& v = pooled[t.metrics[k]];
      v.insert(v.end(), t.columns[k].begin(), t.columns[k].end());
    }
    if (t.n_sentences == 0) continue;
    for (const auto& d : decide(t)) decisions.push_back(d.score);
  }
  if (decisions.empty()) throw DomainError("sensitivity report over a corpus without sentences");
  SensitivityReport r;
  r.sentences = decisions.size();
  r.bins = bins;
  for (Metric m : order) r.metrics.push_back(sensitivity(std::string(label(m)), pooled[m], bins));
  r.decision = sensitivity("DA", decisions, bins);
  return r;
}

/// Deterministic Fisher-Yates permutation (mt19937_64 is fully specified by the standard).
inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

/// Sentence `perm[k]` of `doc` becomes sentence k.
inline PreprocessedDocument permute_sentences(const PreprocessedDocument& doc, std::span<const std::size_t> perm) {
  if (perm.size() != doc.size()) throw Error("permutation size does not match the document");
  PreprocessedDocument out = doc;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    out.sentences[k] = doc.sentences.at(perm[k]);
    out.raw_sentences[k] = doc.raw_sentences.at(perm[k]);
    out.sentence_words[k] = doc.sentence_words.at(perm[k]);
    out.sentence_section[k] = doc.sentence_section.at(perm[k]);
  }
  return out;
}

struct ShuffleReport {
  std::vector<std::size_t> permutation;
  bool scores_invariant = false;   // multiset of (content, A) unchanged
  bool extract_invariant = false;  // selected content unchanged, up to exchanges of tied sentences at the cutoff
  bool tie_at_cutoff = false;      // sentences with the cutoff score were both kept and dropped
  std::vector<std::string> divergences;

  bool passed() const { return scores_invariant && extract_invariant; }
};

namespace detail {

using ContentScore = std::pair<std::string, double>;

inline std::multiset<ContentScore> content_scores(const PreprocessedDocument& doc, std::span<const DecisionScore> a,
                                                  std::span<const std::size_t> subset) {
  std::multiset<ContentScore> out;
  for (std::size_t s : subset) out.emplace(doc.raw_sentences[s], a[s].score);
  return out;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace detail

/// Checks that reordering sentences changes neither the decision scores (as a
/// multiset of content/score pairs) nor the content of the extract.
inline ShuffleReport shuffle_test(const PreprocessedDocument& doc, std::span<const std::size_t> perm,
                                  const CompressionSpec& spec = {}) {
  ShuffleReport rep;
  rep.permutation.assign(perm.begin(), perm.end());
  const PreprocessedDocument shuffled = permute_sentences(doc, perm);
  if (doc.size() == 0) {
    rep.scores_invariant = rep.extract_invariant = true;
    return rep;
  }
  const auto a = score_document(doc).scores;
  const auto b = score_document(shuffled).scores;

  const auto all = detail::all_indices(doc.size());
  const auto sa = detail::content_scores(doc, a, all);
  const auto sb = detail::content_scores(shuffled, b, all);
  rep.scores_invariant = sa == sb;
  if (!rep.scores_invariant) {
    for (std::size_t k = 0; k < doc.size(); ++k) {
      const std::size_t orig = perm[k];
      if (a[orig].score != b[k].score)
        rep.divergences.push_back("sentence " + std::to_string(orig) + ": " + std::to_string(a[orig].score) +
                                  " became " + std::to_string(b[k].score));
    }
  }

  const auto ea = select(a, doc.sentence_words, spec);
  const auto eb = select(b, shuffled.sentence_words, spec);
  const auto xa = detail::content_scores(doc, a, ea);
  const auto xb = detail::content_scores(shuffled, b, eb);
  if (xa == xb) {
    rep.extract_invariant = true;
  } else if (ea.size() == eb.size() && !ea.empty()) {
    // Position breaks score ties, so tied sentences straddling the cutoff may be exchanged.
    double cutoff = 1.0;
    for (std::size_t s : ea) cutoff = std::min(cutoff, a[s].score);
    auto above = [&](const std::multiset<detail::ContentScore>& x) {
      std::multiset<detail::ContentScore> out;
      for (const auto& cs : x)
        if (cs.second > cutoff) out.insert(cs);
      return out;
    };
    auto at_cutoff = [&](const std::multiset<detail::ContentScore>& x) {
      return std::count_if(x.begin(), x.end(), [&](const auto& cs) { return cs.second == cutoff; });
    };
    rep.tie_at_cutoff = true;
    rep.extract_invariant = above(xa) == above(xb) && at_cutoff(xa) == at_cutoff(xb);
    if (!rep.extract_invariant) rep.divergences.push_back("extract content differs beyond tied sentences");
  } else {
    rep.divergences.push_back("extract sizes differ");
  }
  return rep;
}

inline ShuffleReport shuffle_test(const PreprocessedDocument& doc, std::uint64_t seed, const CompressionSpec& spec = {}) {
  const auto perm = random_permutation(doc.size(), seed);
  return shuffle_test(doc, perm, spec);
}

/// Lowercased, whitespace-collapsed text for answer matching.
inline std::string normalize_answer_text(std::string_view text) {
  const std::string lower = utf8::to_lower(text);
  std::string out;
  for (auto w : detail::split_whitespace(lower)) {
    if (!out.empty()) out.push_back(' ');
    out.append(w);
  }
  return out;
}

/// True when one of `gold` appears in `sentence` (or equals it, with `exact`).
inline bool answer_matches(std::string_view sentence, std::span<const std::string> gold, bool exact = false) {
  const std::string s = normalize_answer_text(sentence);
  for (const auto& g : gold) {
    const std::string n = normalize_answer_text(g);
    if (n.empty()) continue;
    if (exact ? s == n : s.find(n) != std::string::npos) return true;
  }
  return false;
}

}  // namespace cortex
