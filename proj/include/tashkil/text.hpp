#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tashkil/diacritics.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

struct Span {
  std::size_t begin = 0;  // code-point offsets, half-open
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct Token {
  std::u32string text;
  Span span;
  bool arabic = false;  // entirely Arabic letters + diacritics
};

struct Sentence {
  std::vector<UnvowelizedWord> words;
  std::vector<Span> word_spans;
  Span span;
};

inline const std::u32string& default_delimiters() {
  static const std::u32string delims = U".،؟!:؛\n";
  return delims;
}

namespace detail {

// Presentation Forms-B: contiguous glyph runs per base letter.
struct FormRange {
  char32_t lo, hi, base;
};

inline const std::vector<FormRange>& presentation_form_ranges() {
  static const std::vector<FormRange> ranges = {
      {0xFE70, 0xFE71, 0x064B}, {0xFE72, 0xFE72, 0x064C},
      {0xFE74, 0xFE74, 0x064D}, {0xFE76, 0xFE77, 0x064E},
      {0xFE78, 0xFE79, 0x064F}, {0xFE7A, 0xFE7B, 0x0650},
      {0xFE7C, 0xFE7D, 0x0651}, {0xFE7E, 0xFE7F, 0x0652},
      {0xFE80, 0xFE80, 0x0621}, {0xFE81, 0xFE82, 0x0622},
      {0xFE83, 0xFE84, 0x0623}, {0xFE85, 0xFE86, 0x0624},
      {0xFE87, 0xFE88, 0x0625}, {0xFE89, 0xFE8C, 0x0626},
      {0xFE8D, 0xFE8E, 0x0627}, {0xFE8F, 0xFE92, 0x0628},
      {0xFE93, 0xFE94, 0x0629}, {0xFE95, 0xFE98, 0x062A},
      {0xFE99, 0xFE9C, 0x062B}, {0xFE9D, 0xFEA0, 0x062C},
      {0xFEA1, 0xFEA4, 0x062D}, {0xFEA5, 0xFEA8, 0x062E},
      {0xFEA9, 0xFEAA, 0x062F}, {0xFEAB, 0xFEAC, 0x0630},
      {0xFEAD, 0xFEAE, 0x0631}, {0xFEAF, 0xFEB0, 0x0632},
      {0xFEB1, 0xFEB4, 0x0633}, {0xFEB5, 0xFEB8, 0x0634},
      {0xFEB9, 0xFEBC, 0x0635}, {0xFEBD, 0xFEC0, 0x0636},
      {0xFEC1, 0xFEC4, 0x0637}, {0xFEC5, 0xFEC8, 0x0638},
      {0xFEC9, 0xFECC, 0x0639}, {0xFECD, 0xFED0, 0x063A},
      {0xFED1, 0xFED4, 0x0641}, {0xFED5, 0xFED8, 0x0642},
      {0xFED9, 0xFEDC, 0x0643}, {0xFEDD, 0xFEE0, 0x0644},
      {0xFEE1, 0xFEE4, 0x0645}, {0xFEE5, 0xFEE8, 0x0646},
      {0xFEE9, 0xFEEC, 0x0647}, {0xFEED, 0xFEEE, 0x0648},
      {0xFEEF, 0xFEF0, 0x0649}, {0xFEF1, 0xFEF4, 0x064A},
  };
  return ranges;
}

// Lam-alef ligatures expand to two letters.
inline char32_t lam_alef_base(char32_t cp) {
  if (cp == 0xFEF5 || cp == 0xFEF6) return 0x0622;
  if (cp == 0xFEF7 || cp == 0xFEF8) return 0x0623;
  if (cp == 0xFEF9 || cp == 0xFEFA) return 0x0625;
  if (cp == 0xFEFB || cp == 0xFEFC) return 0x0627;
  return 0;
}

// Zero-width format controls removed during normalization.
inline bool is_format_control(char32_t cp) {
  return (cp >= 0x200C && cp <= 0x200F) || cp == 0xFEFF || cp == 0x061C;
}

inline bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\v' ||
         cp == U'\f' || cp == 0x00A0;
}

}  // namespace detail

// Removes tatweel and format controls, and folds Arabic presentation-form
// glyphs back to canonical code points. Diacritics and non-Arabic text are
// preserved. Total and idempotent.
inline std::u32string normalize_text(std::u32string_view raw) {
  std::u32string out;
  out.reserve(raw.size());
  for (char32_t cp : raw) {
    if (cp == unicode::kTatweel || detail::is_format_control(cp)) continue;
    if (char32_t alef = detail::lam_alef_base(cp)) {
      out.push_back(0x0644);
      out.push_back(alef);
      continue;
    }
    bool mapped = false;
    if (cp >= 0xFE70 && cp <= 0xFEF4) {
      for (const auto& r : detail::presentation_form_ranges()) {
        if (cp >= r.lo && cp <= r.hi) {
          out.push_back(r.base);
          mapped = true;
          break;
        }
      }
    }
    if (!mapped) out.push_back(cp);
  }
  return out;
}

// Splits normalized text into tokens. A token is a maximal run that contains
// no whitespace and no sentence delimiter; it is flagged Arabic iff every
// code point is an Arabic letter or diacritic.
inline std::vector<Token> tokenize(
    std::u32string_view text,
    const std::u32string& delims = default_delimiters()) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto is_break = [&](char32_t cp) {
    return detail::is_space(cp) || delims.find(cp) != std::u32string::npos;
  };
  while (i < text.size()) {
    if (is_break(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool arabic = true;
    bool has_letter = false;
    while (j < text.size() && !is_break(text[j])) {
      if (is_arabic_letter(text[j]))
        has_letter = true;
      else if (!is_diacritic_codepoint(text[j]))
        arabic = false;
      ++j;
    }
    tokens.push_back({std::u32string(text.substr(i, j - i)),
                      {i, j},
                      arabic && has_letter});
    i = j;
  }
  return tokens;
}

namespace detail {

// Groups tokens into sentences: a delimiter closes the current group;
// non-Arabic tokens pass through without joining or breaking a sentence.
inline std::vector<std::vector<Token>> sentence_token_groups(
    std::u32string_view text, const std::u32string& delims) {
  std::vector<std::vector<Token>> groups;
  std::vector<Token> current;
  std::size_t i = 0;
  const auto flush = [&] {
    if (!current.empty()) groups.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    const char32_t cp = text[i];
    if (delims.find(cp) != std::u32string::npos) {
      flush();
      ++i;
      continue;
    }
    if (is_space(cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool arabic = true;
    bool has_letter = false;
    while (j < text.size() && !is_space(text[j]) &&
           delims.find(text[j]) == std::u32string::npos) {
      if (is_arabic_letter(text[j]))
        has_letter = true;
      else if (!is_diacritic_codepoint(text[j]))
        arabic = false;
      ++j;
    }
    if (arabic && has_letter)
      current.push_back(
          {std::u32string(text.substr(i, j - i)), {i, j}, true});
    i = j;
  }
  flush();
  return groups;
}

}  // namespace detail

// Sentences of bare words (any diacritics in the source are stripped).
inline std::vector<Sentence> segment(
    std::u32string_view text,
    const std::u32string& delims = default_delimiters()) {
  std::vector<Sentence> sentences;
  for (auto& group : detail::sentence_token_groups(text, delims)) {
    Sentence s;
    for (auto& tok : group) {
      s.words.push_back(strip_diacritics(parse_vowelized(tok.text)));
      s.word_spans.push_back(tok.span);
    }
    s.span = {group.front().span.begin, group.back().span.end};
    sentences.push_back(std::move(s));
  }
  return sentences;
}

// Sentences with per-letter marks retained; the ingestion path for training
// and reference corpora.
inline std::vector<std::vector<VowelizedWord>> segment_vowelized(
    std::u32string_view text,
    const std::u32string& delims = default_delimiters()) {
  std::vector<std::vector<VowelizedWord>> sentences;
  for (auto& group : detail::sentence_token_groups(text, delims)) {
    std::vector<VowelizedWord> s;
    s.reserve(group.size());
    for (auto& tok : group) s.push_back(parse_vowelized(tok.text));
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace tashkil
