#pragma once

// Min-max normalization of the metrics, the voting decision rule and extract
// selection at a compression rate.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/metrics.hpp"

namespace cortex {

inline constexpr double kNeutral = 0.5;

/// (x - min) / (max - min) per value; a constant column maps to 0.5, which the
/// decision rule ignores.
inline std::vector<double> normalize(std::span<const double> raw) {
  std::vector<double> out(raw.size(), kNeutral);
  if (raw.empty()) return out;
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double m = *lo, range = *hi - *lo;
  if (range == 0.0) return out;
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = std::clamp((raw[i] - m) / range, 0.0, 1.0);
  return out;
}

struct NormalizedTable {
  std::vector<Metric> metrics;
  std::vector<std::vector<double>> columns;  // columns[k][sentence], values in [0, 1]
  std::size_t n_sentences = 0;

  std::size_t gamma() const { return metrics.size(); }

  const std::vector<double>& column(Metric m) const {
    const auto it = std::find(metrics.begin(), metrics.end(), m);
    if (it == metrics.end()) throw Error("metric " + std::string(label(m)) + " is not active");
    return columns[static_cast<std::size_t>(it - metrics.begin())];
  }

  std::vector<double> row(std::size_t sentence) const {
    std::vector<double> r;
    r.reserve(columns.size());
    for (const auto& c : columns) r.push_back(c.at(sentence));
    return r;
  }
};

inline NormalizedTable normalize(const MetricTable& table) {
  NormalizedTable out;
  out.metrics = table.metrics;
  out.n_sentences = table.n_sentences;
  out.columns.reserve(table.columns.size());
  for (const auto& c : table.columns) out.columns.push_back(normalize(c));
  return out;
}

struct DecisionScore {
  double score = kNeutral;  // A
  bool advantaged = false;  // A > 0.5
};

/// Votes of one sentence. Values above 0.5 push the score up, values below push it
/// down, 0.5 abstains; both tendencies are divided by the number of metrics.
/// Equal tendencies fall to the disadvantaging branch.
inline DecisionScore decide_row(std::span<const double> norms, std::size_t gamma) {
  if (gamma == 0) throw DomainError("decision needs at least one metric");
  double alpha = 0.0, beta = 0.0;
  for (double v : norms) {
    if (v > kNeutral)
      alpha += v - kNeutral;
    else if (v < kNeutral)
      beta += kNeutral - v;
  }
  const double g = static_cast<double>(gamma);
  if (alpha > beta) return {kNeutral + alpha / g, true};
  return {kNeutral - beta / g, false};
}

inline std::vector<DecisionScore> decide(const NormalizedTable& table) {
  if (table.gamma() == 0) throw DomainError("decision needs at least one metric");
  std::vector<DecisionScore> out;
  out.reserve(table.n_sentences);
  std::vector<double> row(table.gamma());
  for (std::size_t s = 0; s < table.n_sentences; ++s) {
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = table.columns[k][s];
    out.push_back(decide_row(row, table.gamma()));
  }
  return out;
}

enum class CompressionUnit { sentences, words };

inline std::string_view to_string(CompressionUnit u) { return u == CompressionUnit::words ? "words" : "sentences"; }

struct CompressionSpec {
  double tau = 25.0;  // percent
  CompressionUnit unit = CompressionUnit::sentences;

  void validate() const {
    if (!(tau > 0.0 && tau <= 100.0)) throw ConfigError("compression rate must lie in (0, 100]");
  }
};

/// Sentence indices by decreasing score; equal scores keep document order.
inline std::vector<std::size_t> rank_order(std::span<const DecisionScore> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a].score > scores[b].score; });
  return order;
}

/// round(tau * n / 100) with halves rounded up, at least one sentence when n > 0.
inline std::size_t target_sentence_count(std::size_t n, double tau) {
  if (n == 0) return 0;
  const double exact = tau * static_cast<double>(n) / 100.0;
  const auto k = static_cast<std::size_t>(std::floor(exact + 0.5));
  return std::clamp<std::size_t>(k, 1, n);
}

/// Picks the extract; indices are returned in document order.
inline std::vector<std::size_t> select(std::span<const DecisionScore> scores, std::span<const std::size_t> sentence_words,
                                       const CompressionSpec& spec) {
  spec.validate();
  if (scores.empty()) return {};
  const auto order = rank_order(scores);
  std::size_t take = 0;
  if (spec.unit == CompressionUnit::sentences) {
    take = target_sentence_count(scores.size(), spec.tau);
  } else {
    if (sentence_words.size() != scores.size()) throw Error("word counts do not match the sentence count");
    const double total = std::accumulate(sentence_words.begin(), sentence_words.end(), 0.0);
    const double target = spec.tau * total / 100.0;
    double acc = 0.0;
    while (take < order.size() && (take == 0 || acc < target)) acc += static_cast<double>(sentence_words[order[take++]]);
  }
  std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace cortex
