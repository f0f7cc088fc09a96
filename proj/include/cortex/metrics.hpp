#pragma once

// The ten sentence metrics computed from the frequency and presence matrices.
//
//   F      term frequency                 sum_i gamma
//   I      interactivity                  sum over present terms of sentences sharing the term
//   Delta  sum of probability frequencies sum_i p_i gamma
//   E      entropy                        -sum over present terms of p_i log2 p_i
//   Psi    Hamming distances              sum over present term pairs of H
//   phi    Hamming weight                 number of distinct terms
//   Theta  Hamming weight of words        sum over present terms of psi_i
//   Pi     heavy Hamming weight           phi * Theta
//   Omega  Hamming weight by frequency    sum_i psi_i gamma
//   theta  angle to the title             cosine of sentence and reference vectors
//
// p_i is the share of term i among all T occurrences and psi_i the number of
// sentences containing it.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/lexmatrix.hpp"

namespace cortex {

enum class Metric : std::uint8_t {
  frequency,
  interactivity,
  probability_sum,
  entropy,
  hamming_distance,
  hamming_weight,
  hamming_word_weight,
  hamming_heavy,
  hamming_frequency_weight,
  title_angle,
};

inline constexpr std::size_t kMetricCount = 10;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::frequency,        Metric::interactivity,       Metric::probability_sum,
    Metric::entropy,          Metric::hamming_distance,    Metric::hamming_weight,
    Metric::hamming_word_weight, Metric::hamming_heavy,    Metric::hamming_frequency_weight,
    Metric::title_angle,
};

/// Metric set of the query-personalized first pass.
inline constexpr std::array<Metric, 2> kPersonalizedMetrics = {Metric::frequency, Metric::title_angle};

inline std::string_view label(Metric m) {
  switch (m) {
    case Metric::frequency: return "F";
    case Metric::interactivity: return "I";
    case Metric::probability_sum: return "Delta";
    case Metric::entropy: return "E";
    case Metric::hamming_distance: return "Psi";
    case Metric::hamming_weight: return "phi";
    case Metric::hamming_word_weight: return "Theta";
    case Metric::hamming_heavy: return "Pi";
    case Metric::hamming_frequency_weight: return "Omega";
    case Metric::title_angle: return "theta";
  }
  return "?";
}

/// Lower-triangular term x term matrix: H(m, n) is the number of sentences
/// containing exactly one of terms m and n.
class HammingMatrix {
 public:
  HammingMatrix() = default;
  explicit HammingMatrix(std::size_t n_terms) : n_(n_terms), cells_(n_terms < 2 ? 0 : n_terms * (n_terms - 1) / 2, 0) {}

  std::size_t size() const { return n_; }

  /// Symmetric access; the diagonal is zero.
  std::uint32_t operator()(TermId m, TermId n) const {
    if (m == n) return 0;
    return cells_[index(m, n)];
  }
  std::uint32_t& at(TermId m, TermId n) {
    if (m == n) throw Error("Hamming matrix has no diagonal cells");
    return cells_[index(m, n)];
  }

 private:
  std::size_t index(TermId m, TermId n) const {
    if (m < n) std::swap(m, n);
    if (m >= n_) throw Error("Hamming matrix index out of range");
    return static_cast<std::size_t>(m) * (m - 1) / 2 + n;
  }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

/// H from column-pair co-occurrences: H(m,n) = psi_m + psi_n - 2 |S_m & S_n|.
/// Work is O(sum of squared sentence vocabularies + N_L^2).
inline HammingMatrix hamming_matrix(const TermMatrix& m) {
  HammingMatrix h(m.n_terms);
  if (m.n_terms < 2) return h;
  std::vector<std::uint32_t> psi(m.n_terms, 0);
  for (const auto& row : m.xi)
    for (TermId t : row) ++psi[t];
  // co(a, b) = number of sentences holding both a and b
  HammingMatrix co(m.n_terms);
  for (const auto& row : m.xi)
    for (std::size_t a = 1; a < row.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) ++co.at(row[a], row[b]);
  for (TermId a = 1; a < m.n_terms; ++a)
    for (TermId b = 0; b < a; ++b) h.at(a, b) = psi[a] + psi[b] - 2 * co(a, b);
  return h;
}

struct FrequencyMetrics {
  std::vector<double> frequency;        // F
  std::vector<double> probability_sum;  // Delta
  std::vector<double> entropy;          // E
  std::vector<double> probability;      // p_i
};

inline FrequencyMetrics frequency_metrics(const TermMatrix& m) {
  const std::size_t ns = m.n_sentences();
  FrequencyMetrics out{std::vector<double>(ns, 0.0), std::vector<double>(ns, 0.0), std::vector<double>(ns, 0.0),
                       std::vector<double>(m.n_terms, 0.0)};
  if (m.total == 0) return out;
  std::vector<std::uint64_t> column(m.n_terms, 0);
  for (const auto& row : m.gamma)
    for (const auto& e : row) column[e.term] += e.count;
  const double total = static_cast<double>(m.total);
  std::vector<double> plogp(m.n_terms, 0.0);
  for (std::size_t i = 0; i < m.n_terms; ++i) {
    out.probability[i] = static_cast<double>(column[i]) / total;
    if (column[i] > 0) plogp[i] = -out.probability[i] * std::log2(out.probability[i]);
  }
  for (std::size_t s = 0; s < ns; ++s) {
    std::uint64_t f = 0;
    double delta = 0.0, entropy = 0.0;
    for (const auto& e : m.gamma[s]) {
      f += e.count;
      delta += out.probability[e.term] * e.count;
      entropy += plogp[e.term];
    }
    out.frequency[s] = static_cast<double>(f);
    out.probability_sum[s] = delta;
    out.entropy[s] = entropy;
  }
  return out;
}

struct HammingMetrics {
  std::vector<double> interactivity;             // I
  std::vector<double> hamming_distance;          // Psi
  std::vector<double> hamming_weight;            // phi
  std::vector<double> hamming_word_weight;       // Theta
  std::vector<double> hamming_heavy;             // Pi
  std::vector<double> hamming_frequency_weight;  // Omega
  std::vector<std::uint32_t> presence;           // psi_i
};

/// Pass `h == nullptr` to skip Psi (left at zero).
inline HammingMetrics hamming_metrics(const TermMatrix& m, const HammingMatrix* h) {
  const std::size_t ns = m.n_sentences();
  HammingMetrics out;
  for (auto* v : {&out.interactivity, &out.hamming_distance, &out.hamming_weight, &out.hamming_word_weight,
                  &out.hamming_heavy, &out.hamming_frequency_weight})
    v->assign(ns, 0.0);
  out.presence.assign(m.n_terms, 0);
  for (const auto& row : m.xi)
    for (TermId t : row) ++out.presence[t];

  for (std::size_t s = 0; s < ns; ++s) {
    const auto& present = m.xi[s];
    std::uint64_t theta = 0, interactivity = 0, omega = 0, psi_sum = 0;
    for (TermId t : present) {
      theta += out.presence[t];
      interactivity += out.presence[t] - 1;  // other sentences sharing t
    }
    for (const auto& e : m.gamma[s]) omega += static_cast<std::uint64_t>(out.presence[e.term]) * e.count;
    if (h) {
      for (std::size_t a = 1; a < present.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) psi_sum += (*h)(present[a], present[b]);
    }
    const std::uint64_t phi = present.size();
    out.hamming_weight[s] = static_cast<double>(phi);
    out.hamming_word_weight[s] = static_cast<double>(theta);
    out.interactivity[s] = static_cast<double>(interactivity);
    out.hamming_heavy[s] = static_cast<double>(phi * theta);
    out.hamming_frequency_weight[s] = static_cast<double>(omega);
    out.hamming_distance[s] = static_cast<double>(psi_sum);
  }
  return out;
}

/// Cosine between each gamma row and a dense reference vector over the lexicon.
/// Zero-norm rows or reference give 0.
inline std::vector<double> title_angle(const TermMatrix& m, std::span<const double> reference) {
  if (reference.size() != m.n_terms) throw Error("reference vector does not match the lexicon size");
  double ref_norm = 0.0;
  for (double r : reference) ref_norm += r * r;
  ref_norm = std::sqrt(ref_norm);
  std::vector<double> out(m.n_sentences(), 0.0);
  if (ref_norm == 0.0) return out;
  for (std::size_t s = 0; s < m.n_sentences(); ++s) {
    double dot = 0.0, norm = 0.0;
    for (const auto& e : m.gamma[s]) {
      dot += e.count * reference[e.term];
      norm += static_cast<double>(e.count) * e.count;
    }
    if (norm == 0.0) continue;
    out[s] = std::clamp(dot / (std::sqrt(norm) * ref_norm), 0.0, 1.0);
  }
  return out;
}

/// Reference vectors for the angle metric and the one each sentence is compared to.
struct AngleReferences {
  std::vector<std::vector<double>> vectors;
  std::vector<std::optional<std::size_t>> of_sentence;

  static AngleReferences single(std::vector<double> reference, std::size_t n_sentences) {
    AngleReferences r;
    r.vectors.push_back(std::move(reference));
    r.of_sentence.assign(n_sentences, 0);
    return r;
  }
};

/// Each sentence uses the title of its enclosing section when it has one, else the main title.
inline AngleReferences title_references(const PreprocessedDocument& doc, const TermMatrix& m) {
  AngleReferences r;
  std::optional<std::size_t> main;
  for (std::size_t t = 0; t < doc.titles.size(); ++t) {
    const auto row = m.dense_title_row(t);
    r.vectors.emplace_back(row.begin(), row.end());
    if (!main && doc.titles[t].level == 0) main = t;
  }
  r.of_sentence.resize(m.n_sentences());
  for (std::size_t s = 0; s < m.n_sentences(); ++s) {
    const auto section = s < doc.sentence_section.size() ? doc.sentence_section[s] : std::nullopt;
    r.of_sentence[s] = section ? section : main;
  }
  return r;
}

inline std::vector<double> title_angle(const TermMatrix& m, const AngleReferences& refs) {
  std::vector<double> out(m.n_sentences(), 0.0);
  std::vector<std::vector<double>> per_reference;
  per_reference.reserve(refs.vectors.size());
  for (const auto& v : refs.vectors) per_reference.push_back(title_angle(m, v));
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto ref = s < refs.of_sentence.size() ? refs.of_sentence[s] : std::nullopt;
    if (ref) out[s] = per_reference.at(*ref)[s];
  }
  return out;
}

/// Raw metric values, one column per active metric.
struct MetricTable {
  std::vector<Metric> metrics;               // active metrics, in voting order
  std::vector<std::vector<double>> columns;  // columns[k][sentence]
  std::vector<double> probability;           // p_i
  std::vector<std::uint32_t> presence;       // psi_i
  std::size_t n_sentences = 0;

  std::size_t gamma() const { return metrics.size(); }

  bool has(Metric m) const { return std::find(metrics.begin(), metrics.end(), m) != metrics.end(); }

  const std::vector<double>& column(Metric m) const {
    const auto it = std::find(metrics.begin(), metrics.end(), m);
    if (it == metrics.end()) throw Error("metric " + std::string(label(m)) + " is not active");
    return columns[static_cast<std::size_t>(it - metrics.begin())];
  }
};

inline MetricTable compute_metrics(const TermMatrix& m, const AngleReferences& refs,
                                   std::span<const Metric> active = kAllMetrics) {
  if (active.empty()) throw DomainError("at least one metric must be active");
  const auto wants = [&](Metric x) { return std::find(active.begin(), active.end(), x) != active.end(); };
  MetricTable table;
  table.n_sentences = m.n_sentences();
  const FrequencyMetrics freq = frequency_metrics(m);
  std::optional<HammingMatrix> h;
  if (wants(Metric::hamming_distance)) h = hamming_matrix(m);
  const HammingMetrics ham = hamming_metrics(m, h ? &*h : nullptr);
  table.probability = freq.probability;
  table.presence = ham.presence;
  for (Metric x : active) {
    if (table.has(x)) throw Error("metric listed twice");
    table.metrics.push_back(x);
    switch (x) {
      case Metric::frequency: table.columns.push_back(freq.frequency); break;
      case Metric::interactivity: table.columns.push_back(ham.interactivity); break;
      case Metric::probability_sum: table.columns.push_back(freq.probability_sum); break;
      case Metric::entropy: table.columns.push_back(freq.entropy); break;
      case Metric::hamming_distance: table.columns.push_back(ham.hamming_distance); break;
      case Metric::hamming_weight: table.columns.push_back(ham.hamming_weight); break;
      case Metric::hamming_word_weight: table.columns.push_back(ham.hamming_word_weight); break;
      case Metric::hamming_heavy: table.columns.push_back(ham.hamming_heavy); break;
      case Metric::hamming_frequency_weight: table.columns.push_back(ham.hamming_frequency_weight); break;
      case Metric::title_angle: table.columns.push_back(title_angle(m, refs)); break;
    }
  }
  return table;
}

}  // namespace cortex
