#pragma once

// Raw text to segmented, filtered and normalized documents.
//
// A document is split into sentences on a configurable delimiter set, its main
// title is detected heuristically, and every sentence becomes a list of term
// ids. Terms are produced by lowercasing, filtering (stoplist, numbers,
// parenthesized text, symbols), compound detection, lemma lookup and finally
// suffix stemming of the lemma.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cortex/error.hpp"
#include "cortex/stemmer.hpp"
#include "cortex/utf8.hpp"

namespace cortex {

using TermId = std::uint32_t;

struct RawDocument {
  std::string body;
  std::string encoding = "utf-8";
  std::string source_id;
};

enum class ModePreset { generic, qa };

struct PipelineConfig {
  /// Lowercase surface forms; entries containing spaces are multiword expressions.
  std::unordered_set<std::string> stoplist;
  bool delete_function_words = true;
  bool delete_numbers = true;
  bool remove_parenthesized = true;
  /// Spelled-out numbers, removed together with digits when delete_numbers is set.
  std::unordered_set<std::string> number_words;
  std::unordered_map<std::string, std::string> lemma_table;
  SuffixStemmer stemmer;
  /// Multiword expressions as lowercase word sequences.
  std::vector<std::vector<std::string>> compounds;
  /// '\n' stands for a line break (CR, LF or CRLF).
  std::u32string sentence_delimiters = U".\n:?!";
  std::size_t title_fallback_words = 10;

  void apply_preset(ModePreset preset) { delete_numbers = preset == ModePreset::generic; }

  void validate() const {
    if (sentence_delimiters.empty()) throw ConfigError("sentence delimiter set is empty");
    if (title_fallback_words == 0) throw ConfigError("title fallback word count must be positive");
    for (const auto& c : compounds)
      if (c.size() < 2) throw ConfigError("compound entries need at least two words");
  }
};

struct SentenceSpan {
  std::string text;   // trimmed sentence text, delimiter included
  std::size_t begin;  // byte span in the segmented text; spans are contiguous
  std::size_t end;
};

enum class TitleRule { none, capitalized, carriage_return, first_sentence, fallback, explicit_markup };

inline std::string_view to_string(TitleRule r) {
  switch (r) {
    case TitleRule::none: return "none";
    case TitleRule::capitalized: return "capitalized";
    case TitleRule::carriage_return: return "carriage-return";
    case TitleRule::first_sentence: return "first-sentence";
    case TitleRule::fallback: return "fallback";
    case TitleRule::explicit_markup: return "explicit";
  }
  return "none";
}

struct TitleDetection {
  std::string text;
  TitleRule rule = TitleRule::none;
  /// Byte offset where body text starts. Rules that take the title from a
  /// separate line consume it; the others leave the body intact.
  std::size_t body_offset = 0;
};

struct Title {
  int level = 0;  // 0 = main title, N = Subtitle_N
  std::string text;
  std::vector<TermId> terms;
};

struct DocumentCounts {
  std::size_t words = 0;           // N_W, whitespace-delimited tokens of the body
  std::size_t distinct_words = 0;  // distinct lowercase body tokens
  std::size_t sentences = 0;       // N_S
  std::size_t titles = 0;          // N_T
  std::size_t terms = 0;           // N_M
};

struct PreprocessedDocument {
  std::string source_id;
  std::vector<std::string> term_table;  // id -> term
  std::vector<std::vector<TermId>> sentences;
  std::vector<std::string> raw_sentences;
  std::vector<std::size_t> sentence_words;
  std::vector<Title> titles;  // titles[0] is the main title when one was found
  /// Index into `titles` of the subtitle heading each sentence's section.
  std::vector<std::optional<std::size_t>> sentence_section;
  TitleRule title_rule = TitleRule::none;
  std::size_t distinct_words = 0;

  std::size_t size() const { return sentences.size(); }

  /// True when the main title was read from the body without being removed from it.
  bool title_repeats_body() const {
    return title_rule == TitleRule::first_sentence || title_rule == TitleRule::fallback;
  }

  DocumentCounts counts() const {
    DocumentCounts c;
    for (std::size_t w : sentence_words) c.words += w;
    c.distinct_words = distinct_words;
    c.sentences = sentences.size();
    c.titles = titles.size();
    c.terms = term_table.size();
    return c;
  }

  std::vector<std::string> sentence_terms(std::size_t s) const {
    std::vector<std::string> out;
    out.reserve(sentences.at(s).size());
    for (TermId id : sentences[s]) out.push_back(term_table.at(id));
    return out;
  }
};

namespace detail {

inline bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v' ||
         cp == 0xA0 || cp == 0x202F || cp == 0x2009;
}

inline bool is_line_break(char32_t cp) { return cp == U'\n' || cp == U'\r'; }

inline bool is_closing_mark(char32_t cp) {
  return cp == U'"' || cp == U')' || cp == U']' || cp == 0xBB || cp == 0x201D || cp == 0x2019;
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  // Non-breaking spaces (U+00A0, U+202F) are common around French punctuation.
  auto strip_front = [&](std::string_view nb) {
    while (s.substr(b, e - b).starts_with(nb)) b += nb.size();
  };
  auto strip_back = [&](std::string_view nb) {
    while (s.substr(b, e - b).ends_with(nb)) e -= nb.size();
  };
  for (int k = 0; k < 2; ++k) {
    strip_front("\xC2\xA0");
    strip_front("\xE2\x80\xAF");
    strip_back("\xC2\xA0");
    strip_back("\xE2\x80\xAF");
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  }
  return s.substr(b, e - b);
}

inline std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

inline bool istarts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  return true;
}

inline bool looks_like_address(std::string_view chunk) {
  if (istarts_with(chunk, "http://") || istarts_with(chunk, "https://") ||
      istarts_with(chunk, "ftp://") || istarts_with(chunk, "www."))
    return chunk.find('.') != std::string_view::npos;
  const auto at = chunk.find('@');
  if (at == std::string_view::npos || at == 0) return false;
  const auto dot = chunk.find('.', at);
  return dot != std::string_view::npos && dot > at + 1 && dot + 1 < chunk.size();
}

}  // namespace detail

/// Byte ranges of URLs and e-mail addresses in `text`, without surrounding punctuation.
inline std::vector<std::pair<std::size_t, std::size_t>> find_addresses(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  static constexpr std::string_view kLead = "(<[\"'";
  static constexpr std::string_view kTrail = ".,;:!?)>]\"'";
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t b = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t e = i;
    while (b < e && kLead.find(text[b]) != std::string_view::npos) ++b;
    while (e > b && kTrail.find(text[e - 1]) != std::string_view::npos) --e;
    if (e > b && detail::looks_like_address(text.substr(b, e - b))) out.emplace_back(b, e);
  }
  return out;
}

/// Splits `body` into sentences. Runs of delimiters ("?!", ".\n") close a single
/// sentence; periods inside URLs, e-mail addresses and decimal numbers never split.
inline std::vector<SentenceSpan> segment_sentences(std::string_view body, const PipelineConfig& config) {
  std::vector<SentenceSpan> out;
  const auto addresses = find_addresses(body);
  const bool line_breaks = config.sentence_delimiters.find(U'\n') != std::u32string::npos;
  auto is_delim = [&](char32_t cp) {
    if (detail::is_line_break(cp)) return line_breaks;
    return config.sentence_delimiters.find(cp) != std::u32string::npos;
  };
  auto protected_at = [&](std::size_t pos) {
    for (const auto& [b, e] : addresses)
      if (pos >= b && pos < e) return true;
    return false;
  };
  auto cp_at = [&](std::size_t pos) -> utf8::Decoded {
    auto d = utf8::decode(body, pos);
    if (d.length == 0) d = {static_cast<unsigned char>(body[pos]), 1};
    return d;
  };
  auto flush = [&](std::size_t b, std::size_t e) {
    const std::string_view text = detail::trim(body.substr(b, e - b));
    if (text.empty()) {
      if (!out.empty()) out.back().end = e;  // keep spans contiguous
      return;
    }
    out.push_back({std::string(text), b, e});
  };

  std::size_t start = 0, pos = 0;
  char32_t prev = 0;
  while (pos < body.size()) {
    const auto d = cp_at(pos);
    const std::size_t next = pos + d.length;
    bool boundary = is_delim(d.cp) && !protected_at(pos);
    if (boundary && d.cp == U'.' && utf8::is_digit(prev) && next < body.size() &&
        utf8::is_digit(cp_at(next).cp))
      boundary = false;
    if (!boundary) {
      prev = d.cp;
      pos = next;
      continue;
    }
    // Absorb the rest of the delimiter run together with closing marks and blanks.
    std::size_t end = next;
    while (end < body.size()) {
      const auto n = cp_at(end);
      if (is_delim(n.cp) || detail::is_closing_mark(n.cp) || detail::is_space(n.cp)) {
        end += n.length;
        continue;
      }
      break;
    }
    flush(start, end);
    start = pos = end;
    prev = 0;
  }
  if (start < body.size()) flush(start, body.size());
  return out;
}

inline std::size_t count_words(std::string_view text) { return detail::split_whitespace(text).size(); }

namespace detail {

inline std::string strip_trailing_delimiters(std::string_view text, const PipelineConfig& config) {
  std::string s(trim(text));
  while (!s.empty()) {
    const unsigned char c = static_cast<unsigned char>(s.back());
    if (c < 0x80 && (config.sentence_delimiters.find(static_cast<char32_t>(c)) != std::u32string::npos ||
                     std::isspace(c)))
      s.pop_back();
    else
      break;
  }
  return std::string(trim(s));
}

inline bool all_capitals(std::string_view text) {
  bool any_letter = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    if (d.length == 0) return false;
    if (utf8::is_letter(d.cp)) {
      any_letter = true;
      if (!utf8::is_upper(d.cp)) return false;
    }
    pos += d.length;
  }
  return any_letter;
}

}  // namespace detail

/// Main-title heuristics, tried in order: an all-capitals first sentence, a first
/// sentence ended by a line break, a short first sentence, the first N words.
inline TitleDetection detect_title(std::string_view body, const PipelineConfig& config) {
  TitleDetection det;
  const auto spans = segment_sentences(body, config);
  if (spans.empty()) return det;
  const SentenceSpan& first = spans.front();
  const std::string_view raw = body.substr(first.begin, first.end - first.begin);

  if (detail::all_capitals(first.text)) {
    det = {detail::strip_trailing_delimiters(first.text, config), TitleRule::capitalized, first.end};
    return det;
  }
  // The delimiter run closing the first sentence contains a line break.
  const std::size_t text_end = raw.find(first.text) + first.text.size();
  const bool ends_with_break = raw.substr(text_end).find_first_of("\r\n") != std::string_view::npos;
  if (ends_with_break && spans.size() > 1) {
    det = {detail::strip_trailing_delimiters(first.text, config), TitleRule::carriage_return, first.end};
    return det;
  }
  if (count_words(first.text) <= config.title_fallback_words) {
    det = {detail::strip_trailing_delimiters(first.text, config), TitleRule::first_sentence, 0};
    return det;
  }
  const auto words = detail::split_whitespace(body);
  std::string title;
  for (std::size_t i = 0; i < words.size() && i < config.title_fallback_words; ++i) {
    if (i) title.push_back(' ');
    title += words[i];
  }
  det = {title, TitleRule::fallback, 0};
  return det;
}

struct Token {
  std::string text;  // surface form; compounds are space-joined
  bool address = false;
};

/// Splits text into word tokens. Apostrophes split elisions ("l'équipe" -> "l", "équipe"),
/// inner hyphens are kept, symbols are dropped, addresses stay whole.
inline std::vector<Token> tokenize(std::string_view text, bool drop_parenthesized) {
  std::vector<Token> out;
  const auto addresses = find_addresses(text);
  std::size_t next_address = 0;
  int depth = 0;
  std::string word;
  auto emit = [&] {
    if (!word.empty()) out.push_back({std::move(word), false});
    word.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (next_address < addresses.size() && pos == addresses[next_address].first) {
      emit();
      const auto [b, e] = addresses[next_address++];
      if (depth == 0) out.push_back({std::string(text.substr(b, e - b)), true});
      pos = e;
      continue;
    }
    while (next_address < addresses.size() && addresses[next_address].second <= pos) ++next_address;
    auto d = utf8::decode(text, pos);
    if (d.length == 0) d = {0xFFFD, 1};
    const std::size_t next = pos + d.length;
    if (drop_parenthesized && d.cp == U'(') {
      emit();
      ++depth;
    } else if (drop_parenthesized && d.cp == U')') {
      emit();
      if (depth > 0) --depth;
    } else if (depth > 0) {
      // inside parentheses
    } else if (utf8::is_word_char(d.cp)) {
      word.append(text.substr(pos, d.length));
    } else if (d.cp == U'-' && !word.empty() && next < text.size()) {
      const auto n = utf8::decode(text, next);
      if (n.length && utf8::is_word_char(n.cp))
        word.push_back('-');
      else
        emit();
    } else {
      emit();
    }
    pos = next;
  }
  emit();
  return out;
}

inline bool is_number_token(std::string_view lower, const PipelineConfig& config) {
  if (config.number_words.contains(std::string(lower))) return true;
  bool digit = false;
  for (char c : lower) {
    if (c >= '0' && c <= '9')
      digit = true;
    else if (c != '.' && c != ',')
      return false;
  }
  return digit;
}

namespace detail {

inline std::string lemma_of(const std::string& lower, const PipelineConfig& config) {
  const auto it = config.lemma_table.find(lower);
  return it == config.lemma_table.end() ? lower : it->second;
}

}  // namespace detail

/// Maps a surface token (or a space-joined compound) to its term, or nullopt when
/// the token is filtered out. Single words are looked up in the lemma table and the
/// lemma is then stemmed; compounds become underscore-joined lemmas.
inline std::optional<std::string> normalize_term(std::string_view token, const PipelineConfig& config) {
  const std::string lower = utf8::to_lower(detail::trim(token));
  if (lower.empty()) return std::nullopt;
  const bool stop = config.delete_function_words;

  if (lower.find(' ') != std::string::npos) {
    if (stop && config.stoplist.contains(lower)) return std::nullopt;
    std::string joined;
    for (std::string_view part : detail::split_whitespace(lower)) {
      if (!joined.empty()) joined.push_back('_');
      joined += detail::lemma_of(std::string(part), config);
    }
    if (stop && config.stoplist.contains(joined)) return std::nullopt;
    return joined;
  }
  if (detail::looks_like_address(lower)) return lower;
  if (stop && config.stoplist.contains(lower)) return std::nullopt;
  if (is_number_token(lower, config)) {
    if (config.delete_numbers) return std::nullopt;
    return lower;
  }
  const std::string lemma = detail::lemma_of(lower, config);
  if (stop && config.stoplist.contains(lemma)) return std::nullopt;
  std::string term = config.stemmer.stem(lemma);
  if (term.empty()) return std::nullopt;
  return term;
}

namespace detail {

/// Groups tokens matching a compound or multiword stop expression. Matching compares
/// lemmas, so inflected forms ("pommes de terre") match the listed entry.
inline std::vector<Token> group_compounds(std::vector<Token> tokens, const PipelineConfig& config) {
  std::vector<std::vector<std::string>> patterns;
  for (const auto& c : config.compounds) {
    std::vector<std::string> p;
    for (const auto& w : c) p.push_back(lemma_of(utf8::to_lower(w), config));
    patterns.push_back(std::move(p));
  }
  for (const auto& s : config.stoplist) {
    if (s.find(' ') == std::string::npos) continue;
    std::vector<std::string> p;
    for (auto w : split_whitespace(s)) p.push_back(lemma_of(std::string(w), config));
    patterns.push_back(std::move(p));
  }
  if (patterns.empty()) return tokens;
  std::sort(patterns.begin(), patterns.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });

  std::vector<std::string> lemmas;
  lemmas.reserve(tokens.size());
  for (const auto& t : tokens) lemmas.push_back(lemma_of(utf8::to_lower(t.text), config));

  std::vector<Token> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::vector<std::string>* hit = nullptr;
    for (const auto& p : patterns) {
      if (i + p.size() > tokens.size()) continue;
      if (std::equal(p.begin(), p.end(), lemmas.begin() + static_cast<std::ptrdiff_t>(i))) {
        hit = &p;
        break;
      }
    }
    if (!hit) {
      out.push_back(std::move(tokens[i++]));
      continue;
    }
    Token joined;
    for (std::size_t k = 0; k < hit->size(); ++k) {
      if (k) joined.text.push_back(' ');
      joined.text += tokens[i + k].text;
    }
    out.push_back(std::move(joined));
    i += hit->size();
  }
  return out;
}

}  // namespace detail

/// Terms of one text span in order, with repetitions.
inline std::vector<std::string> extract_terms(std::string_view text, const PipelineConfig& config) {
  std::vector<std::string> terms;
  for (const Token& t : detail::group_compounds(tokenize(text, config.remove_parenthesized), config)) {
    if (auto term = normalize_term(t.text, config)) terms.push_back(std::move(*term));
  }
  return terms;
}

namespace detail {

class DocumentBuilder {
 public:
  DocumentBuilder(std::string source_id, const PipelineConfig& config) : config_(config) {
    doc_.source_id = std::move(source_id);
  }

  void add_title(int level, std::string text) {
    Title t{level, std::move(text), {}};
    t.terms = intern(extract_terms(t.text, config_));
    if (level > 0) section_ = doc_.titles.size();
    doc_.titles.push_back(std::move(t));
  }

  void add_sentence(std::string text) {
    doc_.sentences.push_back(intern(extract_terms(text, config_)));
    doc_.sentence_words.push_back(count_words(text));
    for (auto w : split_whitespace(text)) words_.insert(utf8::to_lower(w));
    doc_.raw_sentences.push_back(std::move(text));
    doc_.sentence_section.push_back(section_);
  }

  PreprocessedDocument finish(TitleRule rule) {
    doc_.title_rule = rule;
    doc_.distinct_words = words_.size();
    return std::move(doc_);
  }

 private:
  std::vector<TermId> intern(const std::vector<std::string>& terms) {
    std::vector<TermId> ids;
    ids.reserve(terms.size());
    for (const auto& t : terms) {
      auto [it, fresh] = ids_.try_emplace(t, static_cast<TermId>(doc_.term_table.size()));
      if (fresh) doc_.term_table.push_back(t);
      ids.push_back(it->second);
    }
    return ids;
  }

  const PipelineConfig& config_;
  PreprocessedDocument doc_;
  std::unordered_map<std::string, TermId> ids_;
  std::set<std::string> words_;
  std::optional<std::size_t> section_;
};

inline std::string decode_entities(std::string_view s) {
  static const std::pair<std::string_view, std::string_view> kEntities[] = {
      {"&amp;", "&"}, {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&apos;", "'"}};
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool matched = false;
    if (s[i] == '&') {
      for (const auto& [from, to] : kEntities) {
        if (s.substr(i).starts_with(from)) {
          out += to;
          i += from.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) out.push_back(s[i++]);
  }
  return out;
}

inline std::string encode_entities(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::optional<std::string> attribute(std::string_view tag, std::string_view name) {
  std::size_t pos = 0;
  while ((pos = tag.find(name, pos)) != std::string_view::npos) {
    const bool boundary = pos > 0 && std::isspace(static_cast<unsigned char>(tag[pos - 1]));
    std::size_t p = pos + name.size();
    while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
    if (boundary && p < tag.size() && tag[p] == '=') {
      ++p;
      while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
      if (p < tag.size() && (tag[p] == '"' || tag[p] == '\'')) {
        const char q = tag[p];
        const auto close = tag.find(q, p + 1);
        if (close == std::string_view::npos) return std::nullopt;
        return decode_entities(tag.substr(p + 1, close - p - 1));
      }
    }
    pos += name.size();
  }
  return std::nullopt;
}

inline bool looks_structured(std::string_view body) {
  const std::string_view t = trim(body);
  return t.starts_with("<?xml") || t.starts_with("<Texte");
}

/// Reads the <Texte Title=".."> / <S> / <Subtitle_N> layout. Each <S> element is one sentence.
inline PreprocessedDocument parse_structured(std::string_view body, std::string source_id,
                                             const PipelineConfig& config) {
  DocumentBuilder builder(std::move(source_id), config);
  TitleRule rule = TitleRule::none;
  std::size_t pos = 0;
  while ((pos = body.find('<', pos)) != std::string_view::npos) {
    const auto close = body.find('>', pos);
    if (close == std::string_view::npos) throw Error("unterminated tag in structured document");
    const std::string_view tag = body.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    if (tag.empty() || tag[0] == '/' || tag[0] == '?' || tag[0] == '!') continue;
    std::string_view name = tag.substr(0, tag.find_first_of(" \t\r\n/"));
    if (name == "Texte" || name == "Text") {
      if (auto t = attribute(tag, "Title"); t && !trim(*t).empty()) {
        builder.add_title(0, std::string(trim(*t)));
        rule = TitleRule::explicit_markup;
      }
      continue;
    }
    const bool sentence = name == "S";
    const bool subtitle = name.starts_with("Subtitle_");
    if (!sentence && !subtitle) continue;
    const std::string end_tag = "</" + std::string(name) + ">";
    const auto end = body.find(end_tag, pos);
    if (end == std::string_view::npos) throw Error("missing " + end_tag + " in structured document");
    std::string content = decode_entities(trim(body.substr(pos, end - pos)));
    pos = end + end_tag.size();
    if (sentence) {
      if (!content.empty()) builder.add_sentence(std::move(content));
    } else {
      int level = 1;
      try {
        level = std::stoi(std::string(name.substr(9)));
      } catch (const std::exception&) {
        level = 1;
      }
      builder.add_title(std::max(level, 1), std::move(content));
    }
  }
  return builder.finish(rule);
}

}  // namespace detail

/// Runs the full pipeline on one document. Throws EncodingError on undecodable input.
inline PreprocessedDocument preprocess(const RawDocument& raw, const PipelineConfig& config) {
  config.validate();
  std::string body;
  try {
    body = utf8::to_utf8(raw.body, raw.encoding);
  } catch (const EncodingError& e) {
    throw EncodingError((raw.source_id.empty() ? std::string("document") : raw.source_id) + ": " + e.what());
  }
  if (detail::looks_structured(body)) return detail::parse_structured(body, raw.source_id, config);

  detail::DocumentBuilder builder(raw.source_id, config);
  const TitleDetection title = detect_title(body, config);
  if (title.rule != TitleRule::none && !title.text.empty()) builder.add_title(0, title.text);
  for (auto& span : segment_sentences(std::string_view(body).substr(title.body_offset), config))
    builder.add_sentence(std::move(span.text));
  return builder.finish(title.rule);
}

/// Renders a document in the structured XML layout accepted by preprocess().
inline std::string render_structured(const PreprocessedDocument& doc) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" ?>\n<Texte";
  const Title* main = nullptr;
  for (const auto& t : doc.titles)
    if (t.level == 0) main = &t;
  if (main) out += " Title=\"" + detail::encode_entities(main->text) + "\"";
  out += ">\n";
  std::optional<std::size_t> section;
  for (std::size_t s = 0; s < doc.size(); ++s) {
    const auto cur = s < doc.sentence_section.size() ? doc.sentence_section[s] : std::nullopt;
    if (cur && cur != section) {
      const Title& t = doc.titles.at(*cur);
      const std::string name = "Subtitle_" + std::to_string(t.level);
      out += "  <" + name + ">" + detail::encode_entities(t.text) + "</" + name + ">\n";
    }
    section = cur;
    out += "  <S>" + detail::encode_entities(doc.raw_sentences[s]) + "</S>\n";
  }
  out += "</Texte>\n";
  return out;
}

}  // namespace cortex
