#pragma once

// Sentence retrieval with tf.idf weights and cosine similarity. Document
// frequencies are counted per sentence: D is the number of indexed sentences.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/summarizer.hpp"
#include "cortex/text_pipeline.hpp"

namespace cortex {

struct RankedSentence {
  std::string document;
  std::size_t document_index = 0;  // position in the indexed corpus
  std::size_t sentence = 0;
  double score = 0.0;
};

class SentenceIndex {
 public:
  static SentenceIndex build(std::span<const PreprocessedDocument> docs) {
    SentenceIndex idx;
    std::vector<std::map<std::uint32_t, std::uint32_t>> tf;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      idx.documents_.push_back(docs[d].source_id);
      for (std::size_t s = 0; s < docs[d].size(); ++s) {
        std::map<std::uint32_t, std::uint32_t> counts;
        for (TermId local : docs[d].sentences[s]) {
          const std::string& term = docs[d].term_table.at(local);
          auto [it, fresh] = idx.vocabulary_.try_emplace(term, static_cast<std::uint32_t>(idx.df_.size()));
          if (fresh) idx.df_.push_back(0);
          ++counts[it->second];
        }
        for (const auto& [t, c] : counts) ++idx.df_[t];
        tf.push_back(std::move(counts));
        idx.locations_.push_back({d, s});
      }
    }
    if (idx.locations_.empty()) throw DomainError("cannot index an empty corpus");
    const double n = static_cast<double>(idx.locations_.size());
    idx.idf_.resize(idx.df_.size());
    for (std::size_t t = 0; t < idx.df_.size(); ++t) idx.idf_[t] = std::log(n / static_cast<double>(idx.df_[t]));
    for (const auto& counts : tf) {
      std::vector<std::uint32_t> present;
      for (const auto& [t, c] : counts) present.push_back(t);
      idx.terms_.push_back(std::move(present));
      Vector v;
      double norm = 0.0;
      for (const auto& [t, c] : counts) {
        const double w = c * idx.idf_[t];
        if (w == 0.0) continue;
        v.push_back({t, w});
        norm += w * w;
      }
      idx.vectors_.push_back(std::move(v));
      idx.norms_.push_back(std::sqrt(norm));
    }
    return idx;
  }

  std::size_t size() const { return locations_.size(); }  // D
  std::size_t document_count() const { return documents_.size(); }
  const std::string& document(std::size_t d) const { return documents_.at(d); }

  std::size_t document_frequency(const std::string& term) const {
    const auto it = vocabulary_.find(term);
    return it == vocabulary_.end() ? 0 : df_[it->second];
  }

  double idf(const std::string& term) const {
    const auto it = vocabulary_.find(term);
    return it == vocabulary_.end() ? 0.0 : idf_[it->second];
  }

  /// tf.idf weight of `term` in one indexed sentence.
  double weight(std::size_t document, std::size_t sentence, const std::string& term) const {
    const auto it = vocabulary_.find(term);
    if (it == vocabulary_.end()) return 0.0;
    for (std::size_t k = 0; k < locations_.size(); ++k) {
      if (locations_[k].document != document || locations_[k].sentence != sentence) continue;
      for (const auto& e : vectors_[k])
        if (e.term == it->second) return e.weight;
      return 0.0;
    }
    throw Error("sentence is not indexed");
  }

  /// Sentences by decreasing cosine with the (unexpanded) query terms; zero scores are omitted.
  std::vector<RankedSentence> rank(const Query& q,
                                   std::size_t top_k = std::numeric_limits<std::size_t>::max()) const {
    std::vector<RankedSentence> out;
    const auto qv = query_weights(q);
    if (qv.empty()) return out;
    double qnorm = 0.0;
    for (const auto& [t, w] : qv) qnorm += w * w;
    qnorm = std::sqrt(qnorm);
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      if (norms_[k] == 0.0) continue;
      double dot = 0.0;
      for (const auto& e : vectors_[k])
        if (const auto it = qv.find(e.term); it != qv.end()) dot += e.weight * it->second;
      if (dot <= 0.0) continue;
      const double score = std::clamp(dot / (norms_[k] * qnorm), 0.0, 1.0);
      out.push_back({documents_[locations_[k].document], locations_[k].document, locations_[k].sentence, score});
    }
    std::sort(out.begin(), out.end(), [](const RankedSentence& a, const RankedSentence& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.document != b.document) return a.document < b.document;
      if (a.document_index != b.document_index) return a.document_index < b.document_index;
      return a.sentence < b.sentence;
    });
    if (out.size() > top_k) out.resize(top_k);
    return out;
  }

  /// Indices of up to `limit` documents sharing a term with the query, by best sentence score.
  std::vector<std::size_t> select_documents(const Query& q, std::size_t limit) const {
    std::vector<double> best(documents_.size(), -1.0);
    std::vector<std::uint32_t> terms;
    for (const auto& t : q.terms)
      if (const auto it = vocabulary_.find(t); it != vocabulary_.end()) terms.push_back(it->second);
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const std::size_t d = locations_[k].document;
      if (best[d] < 0.0 && shares_term(k, terms)) best[d] = 0.0;
    }
    for (const auto& r : rank(q)) best[r.document_index] = std::max(best[r.document_index], r.score);
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < best.size(); ++d)
      if (best[d] >= 0.0) out.push_back(d);
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      if (best[a] != best[b]) return best[a] > best[b];
      return documents_[a] < documents_[b];
    });
    if (out.size() > limit) out.resize(limit);
    return out;
  }

 private:
  struct Entry {
    std::uint32_t term;
    double weight;
  };
  using Vector = std::vector<Entry>;
  struct Location {
    std::size_t document;
    std::size_t sentence;
  };

  std::map<std::uint32_t, double> query_weights(const Query& q) const {
    std::map<std::uint32_t, double> tf;
    for (const auto& t : q.terms)
      if (const auto it = vocabulary_.find(t); it != vocabulary_.end()) tf[it->second] += 1.0;
    std::map<std::uint32_t, double> out;
    for (const auto& [t, c] : tf)
      if (idf_[t] > 0.0) out[t] = c * idf_[t];
    return out;
  }

  // Checks the full term set: weight vectors drop zero-idf terms.
  bool shares_term(std::size_t k, const std::vector<std::uint32_t>& terms) const {
    const auto& present = terms_[k];
    return std::any_of(terms.begin(), terms.end(),
                       [&](std::uint32_t t) { return std::binary_search(present.begin(), present.end(), t); });
  }

  std::unordered_map<std::string, std::uint32_t> vocabulary_;
  std::vector<std::uint32_t> df_;
  std::vector<double> idf_;
  std::vector<std::string> documents_;
  std::vector<Location> locations_;
  std::vector<Vector> vectors_;
  std::vector<double> norms_;
  std::vector<std::vector<std::uint32_t>> terms_;
};

}  // namespace cortex
