#pragma once

// Loaders for the plain-text resource files: stoplists, lemma tables, compound
// lists, number words, thesauri, question and gold-answer files.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/stemmer.hpp"
#include "cortex/summarizer.hpp"
#include "cortex/text_pipeline.hpp"
#include "cortex/utf8.hpp"

namespace cortex {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

/// Non-empty lines with comments (#) and surrounding blanks removed.
inline std::vector<std::string> resource_lines(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (const auto bad = utf8::first_invalid(text)) throw EncodingError(path.string() + ": invalid UTF-8 at byte " + std::to_string(*bad));
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#')) continue;
    const auto t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string collapse_spaces(std::string_view s) {
  std::string out;
  for (auto w : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(w);
  }
  return out;
}

}  // namespace detail

inline std::unordered_set<std::string> load_stoplist(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : detail::resource_lines(path)) out.insert(detail::collapse_spaces(utf8::to_lower(line)));
  return out;
}

/// TSV surface<TAB>lemma.
inline std::unordered_map<std::string, std::string> load_lemmas(const std::filesystem::path& path) {
  std::unordered_map<std::string, std::string> out;
  std::size_t n = 0;
  for (const auto& line : detail::resource_lines(path)) {
    ++n;
    const auto f = detail::split(line, '\t');
    if (f.size() != 2 || f[0].empty() || f[1].empty())
      throw ConfigError(path.string() + ": entry " + std::to_string(n) + " is not surface<TAB>lemma");
    out[utf8::to_lower(f[0])] = utf8::to_lower(f[1]);
  }
  return out;
}

inline std::vector<std::vector<std::string>> load_compounds(const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> out;
  for (const auto& line : detail::resource_lines(path)) {
    const std::string lower = utf8::to_lower(line);
    std::vector<std::string> words;
    for (auto w : detail::split_whitespace(lower)) words.emplace_back(w);
    if (words.size() < 2) throw ConfigError(path.string() + ": compound '" + line + "' has a single word");
    out.push_back(std::move(words));
  }
  return out;
}

inline SuffixStemmer stemmer_for(std::string_view lang) {
  if (lang == "fr") return SuffixStemmer(french_suffix_rules());
  if (lang == "en") return SuffixStemmer(english_suffix_rules());
  if (lang == "none") return SuffixStemmer();
  throw ConfigError("no stemmer for language '" + std::string(lang) + "'");
}

/// Reads stoplist.txt, lemmas.tsv, compounds.txt and numbers.txt from `dir`
/// when present, and picks the stemmer for `lang`.
inline PipelineConfig load_language(const std::filesystem::path& dir, std::string_view lang,
                                    ModePreset preset = ModePreset::generic) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("resource directory " + dir.string() + " does not exist");
  PipelineConfig c;
  c.apply_preset(preset);
  c.stemmer = stemmer_for(lang);
  if (auto p = dir / "stoplist.txt"; std::filesystem::exists(p)) c.stoplist = load_stoplist(p);
  if (auto p = dir / "lemmas.tsv"; std::filesystem::exists(p)) c.lemma_table = load_lemmas(p);
  if (auto p = dir / "compounds.txt"; std::filesystem::exists(p)) c.compounds = load_compounds(p);
  if (auto p = dir / "numbers.txt"; std::filesystem::exists(p)) c.number_words = load_stoplist(p);
  c.validate();
  return c;
}

/// TSV head<TAB>syn1,syn2 where each synonym may carry a weight as syn:0.5.
inline Thesaurus load_thesaurus(const std::filesystem::path& path, const PipelineConfig& config,
                                std::size_t max_expansion = 2) {
  Thesaurus th(max_expansion);
  std::size_t n = 0;
  for (const auto& line : detail::resource_lines(path)) {
    ++n;
    const auto f = detail::split(line, '\t');
    if (f.size() != 2 || f[0].empty()) throw ConfigError(path.string() + ": entry " + std::to_string(n) + " is not head<TAB>synonyms");
    std::vector<std::pair<std::string, double>> syns;
    for (const auto& item : detail::split(f[1], ',')) {
      if (item.empty()) continue;
      double w = 1.0;
      std::string term = item;
      if (const auto colon = item.rfind(':'); colon != std::string::npos) {
        const std::string num = item.substr(colon + 1);
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), w);
        if (ec != std::errc() || ptr != num.data() + num.size() || !(w > 0.0))
          throw ConfigError(path.string() + ": bad synonym weight in '" + item + "'");
        term = item.substr(0, colon);
      }
      syns.emplace_back(term, w);
    }
    th.add(f[0], syns, config);
  }
  return th;
}

struct Question {
  std::string id;
  std::string text;
  std::vector<std::string> answers;  // expected answers given inline, if any
};

/// One question per line, optional TAB-separated expected answer(s) split on '|'.
/// Ids are 1-based line numbers among the non-empty lines.
inline std::vector<Question> load_questions(const std::filesystem::path& path) {
  std::vector<Question> out;
  for (const auto& line : detail::resource_lines(path)) {
    const auto f = detail::split(line, '\t');
    Question q{std::to_string(out.size() + 1), f[0], {}};
    if (q.text.empty()) throw ConfigError(path.string() + ": empty question on entry " + q.id);
    if (f.size() > 1)
      for (auto& a : detail::split(f[1], '|'))
        if (!a.empty()) q.answers.push_back(std::move(a));
    out.push_back(std::move(q));
  }
  return out;
}

/// TSV question-id<TAB>answer1|answer2.
inline std::map<std::string, std::vector<std::string>> load_gold(const std::filesystem::path& path) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& line : detail::resource_lines(path)) {
    const auto f = detail::split(line, '\t');
    if (f.size() != 2 || f[0].empty()) throw ConfigError(path.string() + ": gold line '" + line + "' is not id<TAB>answers");
    auto& list = out[f[0]];
    for (auto& a : detail::split(f[1], '|'))
      if (!a.empty()) list.push_back(std::move(a));
  }
  return out;
}

/// Loads a text file as a raw document named after the file.
inline RawDocument load_document(const std::filesystem::path& path, std::string encoding = "utf-8") {
  return RawDocument{read_file(path), std::move(encoding), path.filename().string()};
}

}  // namespace cortex
