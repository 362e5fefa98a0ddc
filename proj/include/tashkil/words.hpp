#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tashkil/buckwalter.hpp"
#include "tashkil/diacritics.hpp"
#include "tashkil/errors.hpp"
#include "tashkil/utf8.hpp"

namespace tashkil {

// Bare letter sequence, no diacritic code points.
struct UnvowelizedWord {
  std::u32string letters;

  bool operator==(const UnvowelizedWord&) const = default;
};

// Letter sequence plus one mark per letter.
struct VowelizedWord {
  std::u32string letters;
  std::vector<DiacriticMark> marks;

  bool operator==(const VowelizedWord&) const = default;
};

// The mark vector of a word with its letters removed; the second model's
// hidden state.
struct DiacriticPattern {
  std::vector<DiacriticMark> marks;

  bool operator==(const DiacriticPattern&) const = default;
};

inline UnvowelizedWord strip_diacritics(const VowelizedWord& v) {
  return {v.letters};
}

inline DiacriticPattern extract_pattern(const VowelizedWord& v) {
  return {v.marks};
}

inline VowelizedWord apply_pattern(const UnvowelizedWord& w,
                                   const DiacriticPattern& p) {
  if (w.letters.size() != p.marks.size())
    throw LengthMismatch("pattern of length " + std::to_string(p.marks.size()) +
                         " applied to word of length " +
                         std::to_string(w.letters.size()));
  return {w.letters, p.marks};
}

// Parses one Arabic token (letters plus trailing combining marks) into a
// VowelizedWord. A bare shadda followed by a vowel sign, or the reverse
// order, becomes the compound mark; extra or unmodelled marks on an already
// marked letter are ignored (first mark wins); marks before any letter are
// dropped as noise.
inline VowelizedWord parse_vowelized(std::u32string_view token) {
  VowelizedWord word;
  for (char32_t cp : token) {
    if (is_arabic_letter(cp)) {
      word.letters.push_back(cp);
      word.marks.push_back(DiacriticMark::NoMark);
      continue;
    }
    if (!is_diacritic_codepoint(cp) || word.marks.empty()) continue;
    const auto mark = mark_of_codepoint(cp);
    if (!mark) continue;  // superscript alef / annotation signs
    DiacriticMark& slot = word.marks.back();
    if (slot == DiacriticMark::NoMark) {
      slot = *mark;
    } else if (slot == DiacriticMark::Shadda) {
      if (auto compound = with_shadda(*mark)) slot = *compound;
    } else if (*mark == DiacriticMark::Shadda) {
      if (auto compound = with_shadda(slot)) slot = *compound;
    }
  }
  return word;
}

// Serializes back to Arabic text, each letter followed by its mark's
// combining code points.
inline std::u32string vowelized_text(const VowelizedWord& v) {
  std::u32string out;
  out.reserve(v.letters.size() * 2);
  for (std::size_t i = 0; i < v.letters.size(); ++i) {
    out.push_back(v.letters[i]);
    out += mark_codepoints(v.marks[i]);
  }
  return out;
}

inline std::u32string strip_text(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text)
    if (!is_diacritic_codepoint(cp)) out.push_back(cp);
  return out;
}

// Stable string keys for vocabularies and map lookups.
inline std::string word_key(const UnvowelizedWord& w) {
  return utf8_encode(w.letters);
}

inline std::string surface_key(const VowelizedWord& v) {
  return utf8_encode(vowelized_text(v));
}

inline std::string pattern_key(const DiacriticPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.marks.size(); ++i) {
    if (i) out.push_back('.');
    out += mark_token(p.marks[i]);
  }
  return out;
}

// Buckwalter rendering of a full vowelized word ("daxala"); the canonical
// human-auditable form used in fixtures, ordering, and diagnostics.
inline std::string to_buckwalter(const VowelizedWord& v) {
  return buckwalter_encode(vowelized_text(v));
}

inline VowelizedWord from_buckwalter(std::string_view bw) {
  return parse_vowelized(buckwalter_decode(bw));
}

}  // namespace tashkil
