#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cortex/cortex.hpp"
#include "oracle/naive_metrics.hpp"

namespace testing_support {

inline std::string data_path(const std::string& rel) { return std::string(CORTEX_DATA_DIR) + "/" + rel; }

inline cortex::PipelineConfig french() { return cortex::load_language(data_path("resources/fr"), "fr"); }

inline cortex::PipelineConfig english_qa() {
  return cortex::load_language(data_path("resources/en"), "en", cortex::ModePreset::qa);
}

inline cortex::PreprocessedDocument puces() {
  return cortex::preprocess(cortex::load_document(data_path("corpus/puces.txt")), french());
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  double real() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  /// Dense sentence x term counts with at most `max_entry` per cell.
  oracle::Dense matrix(std::size_t max_sentences, std::size_t max_terms, std::uint32_t max_entry) {
    const std::size_t ns = uniform(1, max_sentences);
    const std::size_t nl = uniform(1, max_terms);
    oracle::Dense g(ns, std::vector<std::uint32_t>(nl));
    for (auto& row : g)
      for (auto& c : row) c = static_cast<std::uint32_t>(uniform(0, max_entry));
    return g;
  }

  std::vector<double> reference(std::size_t n, std::uint32_t max_entry) {
    std::vector<double> r(n);
    for (auto& v : r) v = static_cast<double>(uniform(0, max_entry));
    return r;
  }

  /// A document over a small vocabulary "w0".."wK" with a title, so repeats are common.
  cortex::PreprocessedDocument document(std::size_t max_sentences, std::size_t vocabulary, std::size_t max_len) {
    const std::size_t ns = uniform(1, max_sentences);
    std::vector<std::vector<std::string>> sentences(ns);
    for (auto& s : sentences) {
      const std::size_t len = uniform(1, max_len);
      for (std::size_t k = 0; k < len; ++k) s.push_back("w" + std::to_string(uniform(0, vocabulary - 1)));
    }
    std::vector<std::string> title;
    for (std::size_t k = 0, n = uniform(1, 4); k < n; ++k) title.push_back("w" + std::to_string(uniform(0, vocabulary - 1)));
    auto doc = cortex::make_document("random", sentences, title);
    // Distinct raw texts so content comparisons are unambiguous.
    for (std::size_t s = 0; s < doc.size(); ++s) doc.raw_sentences[s] = "#" + std::to_string(s) + " " + doc.raw_sentences[s];
    return doc;
  }

 private:
  std::mt19937_64 rng_;
};

/// Column values of a metric table as a map label -> values, for oracle comparison.
inline const std::vector<double>& oracle_column(const oracle::Metrics& o, cortex::Metric m) {
  using cortex::Metric;
  switch (m) {
    case Metric::frequency: return o.F;
    case Metric::interactivity: return o.I;
    case Metric::probability_sum: return o.Delta;
    case Metric::entropy: return o.E;
    case Metric::hamming_distance: return o.Psi;
    case Metric::hamming_weight: return o.phi;
    case Metric::hamming_word_weight: return o.Theta;
    case Metric::hamming_heavy: return o.Pi;
    case Metric::hamming_frequency_weight: return o.Omega;
    case Metric::title_angle: return o.theta;
  }
  return o.F;
}

inline bool integral(cortex::Metric m) {
  using cortex::Metric;
  return m != Metric::probability_sum && m != Metric::entropy && m != Metric::title_angle;
}

}  // namespace testing_support
