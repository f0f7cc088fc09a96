#pragma once

// Relevant lexicon and the sparse sentence x term matrices: frequencies (gamma),
// presences (xi) and one frequency row per title.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/text_pipeline.hpp"

namespace cortex {

/// Terms occurring at least twice in a document (sentences and titles together).
/// Ids are dense and follow the lexicographic order of the terms, which makes
/// them independent of sentence order.
class Lexicon {
 public:
  Lexicon() = default;

  explicit Lexicon(std::vector<std::string> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
    for (std::size_t i = 0; i < terms_.size(); ++i) ids_.emplace(terms_[i], static_cast<TermId>(i));
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::string& term(TermId id) const { return terms_.at(id); }
  const std::vector<std::string>& terms() const { return terms_; }

  std::optional<TermId> find(const std::string& term) const {
    const auto it = ids_.find(term);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId> ids_;
};

inline constexpr std::size_t kRelevanceThreshold = 2;

inline Lexicon build_lexicon(const PreprocessedDocument& doc) {
  std::vector<std::size_t> freq(doc.term_table.size(), 0);
  for (const auto& s : doc.sentences)
    for (TermId id : s) ++freq.at(id);
  // A title copied from the first sentence would count that sentence twice.
  for (const auto& t : doc.titles) {
    if (t.level == 0 && doc.title_repeats_body()) continue;
    for (TermId id : t.terms) ++freq.at(id);
  }
  std::vector<std::string> relevant;
  for (std::size_t id = 0; id < freq.size(); ++id)
    if (freq[id] >= kRelevanceThreshold) relevant.push_back(doc.term_table[id]);
  return Lexicon(std::move(relevant));
}

struct SparseEntry {
  TermId term;
  std::uint32_t count;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// One row per sentence, entries sorted by term id, zero counts never stored.
using SparseRows = std::vector<std::vector<SparseEntry>>;

struct TermMatrix {
  std::size_t n_terms = 0;  // N_L
  SparseRows gamma;         // N_S rows
  /// Presence lists (xi): the term ids of each gamma row.
  std::vector<std::vector<TermId>> xi;
  SparseRows gamma_titles;  // N_T rows
  std::uint64_t total = 0;  // T

  std::size_t n_sentences() const { return gamma.size(); }

  std::uint32_t frequency(std::size_t sentence, TermId term) const { return lookup(gamma.at(sentence), term); }
  std::uint32_t title_frequency(std::size_t title, TermId term) const {
    return lookup(gamma_titles.at(title), term);
  }
  bool present(std::size_t sentence, TermId term) const {
    const auto& row = xi.at(sentence);
    return std::binary_search(row.begin(), row.end(), term);
  }

  std::vector<std::uint32_t> dense_row(std::size_t sentence) const { return densify(gamma.at(sentence)); }
  std::vector<std::uint32_t> dense_title_row(std::size_t title) const { return densify(gamma_titles.at(title)); }

  /// Builds a matrix from dense rows (tests and synthetic documents).
  static TermMatrix from_dense(const std::vector<std::vector<std::uint32_t>>& rows,
                               const std::vector<std::vector<std::uint32_t>>& title_rows = {}) {
    TermMatrix m;
    m.n_terms = rows.empty() ? (title_rows.empty() ? 0 : title_rows.front().size()) : rows.front().size();
    auto sparsify = [&](const std::vector<std::uint32_t>& r) {
      if (r.size() != m.n_terms) throw Error("ragged dense matrix");
      std::vector<SparseEntry> out;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) out.push_back({static_cast<TermId>(i), r[i]});
      return out;
    };
    for (const auto& r : rows) m.gamma.push_back(sparsify(r));
    for (const auto& r : title_rows) m.gamma_titles.push_back(sparsify(r));
    m.finish();
    return m;
  }

  /// Derives xi and T from gamma.
  void finish() {
    xi.clear();
    total = 0;
    for (const auto& row : gamma) {
      std::vector<TermId> present;
      present.reserve(row.size());
      for (const auto& e : row) {
        present.push_back(e.term);
        total += e.count;
      }
      xi.push_back(std::move(present));
    }
  }

  /// Sparse triplets "sentence,term,count" in row-major order.
  void write_csv(std::ostream& os, const Lexicon* lexicon = nullptr) const {
    os << "sentence,term,count\n";
    for (std::size_t s = 0; s < gamma.size(); ++s)
      for (const auto& e : gamma[s]) {
        os << s << ',';
        if (lexicon)
          os << lexicon->term(e.term);
        else
          os << e.term;
        os << ',' << e.count << '\n';
      }
  }

 private:
  static std::uint32_t lookup(const std::vector<SparseEntry>& row, TermId term) {
    const auto it = std::lower_bound(row.begin(), row.end(), term,
                                     [](const SparseEntry& e, TermId t) { return e.term < t; });
    return it != row.end() && it->term == term ? it->count : 0;
  }

  std::vector<std::uint32_t> densify(const std::vector<SparseEntry>& row) const {
    std::vector<std::uint32_t> out(n_terms, 0);
    for (const auto& e : row) out[e.term] = e.count;
    return out;
  }
};

namespace detail {

inline std::vector<SparseEntry> count_row(std::span<const TermId> terms, const std::vector<std::optional<TermId>>& remap) {
  std::map<TermId, std::uint32_t> counts;
  for (TermId id : terms)
    if (const auto& lex = remap.at(id)) ++counts[*lex];
  std::vector<SparseEntry> row;
  row.reserve(counts.size());
  for (const auto& [term, count] : counts) row.push_back({term, count});
  return row;
}

}  // namespace detail

inline TermMatrix build_matrices(const PreprocessedDocument& doc, const Lexicon& lex) {
  std::vector<std::optional<TermId>> remap(doc.term_table.size());
  for (std::size_t id = 0; id < doc.term_table.size(); ++id) remap[id] = lex.find(doc.term_table[id]);
  TermMatrix m;
  m.n_terms = lex.size();
  m.gamma.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) m.gamma.push_back(detail::count_row(s, remap));
  for (const auto& t : doc.titles) m.gamma_titles.push_back(detail::count_row(t.terms, remap));
  m.finish();
  return m;
}

enum class WordCount { total, distinct };

/// rho_L = N_L / N_W.
inline double lexical_ratio(const PreprocessedDocument& doc, const Lexicon& lex,
                            WordCount denominator = WordCount::total) {
  const auto c = doc.counts();
  const std::size_t words = denominator == WordCount::total ? c.words : c.distinct_words;
  if (words == 0) throw DomainError("lexical ratio undefined for a document without words");
  return static_cast<double>(lex.size()) / static_cast<double>(words);
}

}  // namespace cortex
