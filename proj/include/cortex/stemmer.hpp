#pragma once

// Porter-style affix removal. Rules are grouped into steps; within a step the
// longest matching suffix whose remaining stem is long enough fires, then the
// next step runs on the result. Every rule must shorten the word, so stemming
// always terminates after at most one rewrite per step.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/utf8.hpp"

namespace cortex {

struct SuffixRule {
  int step = 0;
  std::string suffix;
  std::string replacement;
  std::size_t min_stem = 2;  // code points that must remain before the suffix
};

class SuffixStemmer {
 public:
  SuffixStemmer() = default;

  explicit SuffixStemmer(std::vector<SuffixRule> rules) : rules_(std::move(rules)) {
    for (const SuffixRule& r : rules_) {
      if (r.suffix.empty())
        throw ConfigError("stemmer rule with empty suffix");
      if (utf8::length(r.replacement) >= utf8::length(r.suffix))
        throw ConfigError("stemmer rule '-" + r.suffix + "' does not shorten the word");
    }
    std::stable_sort(rules_.begin(), rules_.end(), [](const SuffixRule& a, const SuffixRule& b) {
      if (a.step != b.step) return a.step < b.step;
      return a.suffix.size() > b.suffix.size();
    });
  }

  const std::vector<SuffixRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  std::string stem(std::string_view word) const {
    std::string w(word);
    std::size_t i = 0;
    while (i < rules_.size()) {
      const int step = rules_[i].step;
      for (; i < rules_.size() && rules_[i].step == step; ++i) {
        const SuffixRule& r = rules_[i];
        if (w.size() <= r.suffix.size() || !std::string_view(w).ends_with(r.suffix)) continue;
        const std::string_view base(w.data(), w.size() - r.suffix.size());
        if (utf8::length(base) < r.min_stem) continue;
        w = std::string(base) + r.replacement;
        break;
      }
      while (i < rules_.size() && rules_[i].step == step) ++i;
    }
    return w;
  }

 private:
  std::vector<SuffixRule> rules_;
};

/// Light French rules: plural, common derivational/verbal endings, final mute e.
inline std::vector<SuffixRule> french_suffix_rules() {
  return {
      {1, "aux", "al", 3}, {1, "s", "", 3},      {1, "x", "", 3},

      {2, "issement", "", 3}, {2, "ement", "", 4}, {2, "ation", "", 3}, {2, "ateur", "", 3},
      {2, "atrice", "", 3},   {2, "ité", "", 3},   {2, "isme", "", 3},  {2, "iste", "", 3},
      {2, "euse", "", 3},     {2, "eur", "", 3},   {2, "ique", "", 3},  {2, "ance", "", 3},
      {2, "ence", "", 3},     {2, "er", "", 3},    {2, "ée", "", 3},    {2, "é", "", 3},

      {3, "e", "", 3},
  };
}

/// A reduced Porter rule set for English.
inline std::vector<SuffixRule> english_suffix_rules() {
  return {
      {1, "sses", "ss", 2}, {1, "ies", "i", 2},  {1, "s", "", 3},

      {2, "eed", "ee", 2},  {2, "ing", "", 3},   {2, "ed", "", 3},

      {3, "ational", "ate", 2}, {3, "ization", "ize", 2}, {3, "fulness", "ful", 2},
      {3, "iveness", "ive", 2}, {3, "ation", "ate", 2},   {3, "ement", "", 3},
      {3, "ness", "", 3},       {3, "ment", "", 4},       {3, "ity", "", 3},
      {3, "al", "", 4},

      {4, "e", "", 3},
  };
}

}  // namespace cortex
