#pragma once

// Minimal UTF-8 helpers: validation, Latin-1 transcoding, code point
// iteration and case folding for the Latin scripts the pipeline targets.

#include <cstddef>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cortex/error.hpp"

namespace cortex::utf8 {

struct Decoded {
  char32_t cp = 0;
  std::size_t length = 0;  // bytes consumed; 0 on malformed input
};

/// Decodes one code point at `pos`. Returns length 0 for malformed sequences.
inline Decoded decode(std::string_view s, std::size_t pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const std::size_t n = s.size();
  if (pos >= n) return {};
  const unsigned char b0 = byte(pos);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {};
  }
  if (pos + len > n) return {};
  for (std::size_t k = 1; k < len; ++k) {
    const unsigned char b = byte(pos + k);
    if ((b & 0xC0) != 0x80) return {};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong forms, surrogates and out-of-range values.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    return {};
  return {cp, len};
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

/// Byte offset of the first invalid sequence, or nullopt when `s` is valid UTF-8.
inline std::optional<std::size_t> first_invalid(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const Decoded d = decode(s, pos);
    if (d.length == 0) return pos;
    pos += d.length;
  }
  return std::nullopt;
}

inline bool valid(std::string_view s) { return !first_invalid(s).has_value(); }

inline std::string from_latin1(std::string_view s) {
  std::string out;
  out.reserve(s.size() + s.size() / 8);
  for (char c : s) append(out, static_cast<unsigned char>(c));
  return out;
}

/// Returns `s` as UTF-8. `encoding` is a label such as "utf-8", "latin1" or "iso-8859-1".
inline std::string to_utf8(std::string_view s, std::string_view encoding) {
  std::string label;
  for (char c : encoding)
    if (c != '-' && c != '_') label.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (label.empty() || label == "utf8") {
    if (auto bad = first_invalid(s))
      throw EncodingError("invalid UTF-8 sequence at byte " + std::to_string(*bad));
    return std::string(s);
  }
  if (label == "latin1" || label == "iso88591" || label == "isolatin1") return from_latin1(s);
  throw EncodingError("unsupported encoding label '" + std::string(encoding) + "'");
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x17F && cp != 0x130 && cp != 0x131 && cp != 0x138 && cp != 0x149 &&
      cp != 0x17F) {
    // Latin Extended-A alternates upper/lower, with a phase shift in 0x139..0x148 and 0x179..0x17E.
    const bool shifted = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
    const bool is_upper = shifted ? (cp % 2 == 1) : (cp % 2 == 0);
    return is_upper ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  return cp;
}

inline bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

/// Letters of the Latin, Greek and Cyrillic blocks, plus ASCII digits.
inline bool is_word_char(char32_t cp) {
  if (cp < 0x80) return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || is_digit(cp);
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x24F) return true;
  if (cp >= 0x370 && cp <= 0x3FF) return true;
  if (cp >= 0x400 && cp <= 0x4FF) return true;
  return false;
}

inline bool is_letter(char32_t cp) { return is_word_char(cp) && !is_digit(cp); }

inline bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019 || cp == 0x02BC; }

inline std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const Decoded d = decode(s, pos);
    if (d.length == 0) {
      out.push_back(s[pos++]);
      continue;
    }
    append(out, to_lower(d.cp));
    pos += d.length;
  }
  return out;
}

inline std::size_t length(std::string_view s) {
  std::size_t count = 0, pos = 0;
  while (pos < s.size()) {
    const Decoded d = decode(s, pos);
    pos += d.length == 0 ? 1 : d.length;
    ++count;
  }
  return count;
}

}  // namespace cortex::utf8
