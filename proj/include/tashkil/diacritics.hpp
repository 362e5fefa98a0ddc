#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tashkil {

// The 15 per-character diacritic values. A shadda plus a vowel sign is one
// atomic mark; NoMark renders as "#" in pattern display and as nothing in
// Arabic text.
enum class DiacriticMark : std::uint8_t {
  Fatha,
  Damma,
  Kasra,
  FathaTanween,
  DammaTanween,
  KasraTanween,
  Sukuun,
  Shadda,
  ShaddaFatha,
  ShaddaDamma,
  ShaddaKasra,
  ShaddaFathaTanween,
  ShaddaDammaTanween,
  ShaddaKasraTanween,
  NoMark,
};

inline constexpr int kMarkCount = 15;

inline constexpr std::array<DiacriticMark, kMarkCount> all_marks() {
  return {DiacriticMark::Fatha,
          DiacriticMark::Damma,
          DiacriticMark::Kasra,
          DiacriticMark::FathaTanween,
          DiacriticMark::DammaTanween,
          DiacriticMark::KasraTanween,
          DiacriticMark::Sukuun,
          DiacriticMark::Shadda,
          DiacriticMark::ShaddaFatha,
          DiacriticMark::ShaddaDamma,
          DiacriticMark::ShaddaKasra,
          DiacriticMark::ShaddaFathaTanween,
          DiacriticMark::ShaddaDammaTanween,
          DiacriticMark::ShaddaKasraTanween,
          DiacriticMark::NoMark};
}

namespace unicode {
inline constexpr char32_t kFathatan = 0x064B;
inline constexpr char32_t kDammatan = 0x064C;
inline constexpr char32_t kKasratan = 0x064D;
inline constexpr char32_t kFatha = 0x064E;
inline constexpr char32_t kDamma = 0x064F;
inline constexpr char32_t kKasra = 0x0650;
inline constexpr char32_t kShadda = 0x0651;
inline constexpr char32_t kSukun = 0x0652;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kSuperscriptAlef = 0x0670;
}  // namespace unicode

// ASCII token per mark (Buckwalter signs, "#" for NoMark). Used for pattern
// display and as hidden-state keys of the character model.
inline std::string_view mark_token(DiacriticMark m) {
  switch (m) {
    case DiacriticMark::Fatha: return "a";
    case DiacriticMark::Damma: return "u";
    case DiacriticMark::Kasra: return "i";
    case DiacriticMark::FathaTanween: return "F";
    case DiacriticMark::DammaTanween: return "N";
    case DiacriticMark::KasraTanween: return "K";
    case DiacriticMark::Sukuun: return "o";
    case DiacriticMark::Shadda: return "~";
    case DiacriticMark::ShaddaFatha: return "~a";
    case DiacriticMark::ShaddaDamma: return "~u";
    case DiacriticMark::ShaddaKasra: return "~i";
    case DiacriticMark::ShaddaFathaTanween: return "~F";
    case DiacriticMark::ShaddaDammaTanween: return "~N";
    case DiacriticMark::ShaddaKasraTanween: return "~K";
    case DiacriticMark::NoMark: return "#";
  }
  return "#";
}

// Combining code points of a mark as written in Arabic text (shadda first in
// compounds; nothing for NoMark).
inline std::u32string mark_codepoints(DiacriticMark m) {
  using namespace unicode;
  switch (m) {
    case DiacriticMark::Fatha: return {kFatha};
    case DiacriticMark::Damma: return {kDamma};
    case DiacriticMark::Kasra: return {kKasra};
    case DiacriticMark::FathaTanween: return {kFathatan};
    case DiacriticMark::DammaTanween: return {kDammatan};
    case DiacriticMark::KasraTanween: return {kKasratan};
    case DiacriticMark::Sukuun: return {kSukun};
    case DiacriticMark::Shadda: return {kShadda};
    case DiacriticMark::ShaddaFatha: return {kShadda, kFatha};
    case DiacriticMark::ShaddaDamma: return {kShadda, kDamma};
    case DiacriticMark::ShaddaKasra: return {kShadda, kKasra};
    case DiacriticMark::ShaddaFathaTanween: return {kShadda, kFathatan};
    case DiacriticMark::ShaddaDammaTanween: return {kShadda, kDammatan};
    case DiacriticMark::ShaddaKasraTanween: return {kShadda, kKasratan};
    case DiacriticMark::NoMark: return {};
  }
  return {};
}

// Mark for one of the eight plain combining signs U+064B..U+0652.
inline std::optional<DiacriticMark> mark_of_codepoint(char32_t cp) {
  using namespace unicode;
  switch (cp) {
    case kFathatan: return DiacriticMark::FathaTanween;
    case kDammatan: return DiacriticMark::DammaTanween;
    case kKasratan: return DiacriticMark::KasraTanween;
    case kFatha: return DiacriticMark::Fatha;
    case kDamma: return DiacriticMark::Damma;
    case kKasra: return DiacriticMark::Kasra;
    case kShadda: return DiacriticMark::Shadda;
    case kSukun: return DiacriticMark::Sukuun;
    default: return std::nullopt;
  }
}

inline std::optional<DiacriticMark> with_shadda(DiacriticMark vowel) {
  switch (vowel) {
    case DiacriticMark::Fatha: return DiacriticMark::ShaddaFatha;
    case DiacriticMark::Damma: return DiacriticMark::ShaddaDamma;
    case DiacriticMark::Kasra: return DiacriticMark::ShaddaKasra;
    case DiacriticMark::FathaTanween: return DiacriticMark::ShaddaFathaTanween;
    case DiacriticMark::DammaTanween: return DiacriticMark::ShaddaDammaTanween;
    case DiacriticMark::KasraTanween: return DiacriticMark::ShaddaKasraTanween;
    default: return std::nullopt;
  }
}

// Arabic base letters we model: the standard block plus alef wasla and the
// extended letters the Buckwalter scheme covers.
inline bool is_arabic_letter(char32_t cp) {
  if (cp >= 0x0621 && cp <= 0x063A) return true;
  if (cp >= 0x0641 && cp <= 0x064A) return true;
  switch (cp) {
    case 0x0671:  // alef wasla
    case 0x067E:  // peh
    case 0x0686:  // tcheh
    case 0x06A4:  // veh
    case 0x06AF:  // gaf
      return true;
    default:
      return false;
  }
}

// Combining marks stripped when recovering the bare letter sequence. Broader
// than the eight signs we model: corpora carry superscript alef and Quranic
// annotation, which must not survive into observation keys.
inline bool is_diacritic_codepoint(char32_t cp) {
  if (cp >= 0x064B && cp <= 0x065F) return true;
  if (cp >= 0x0610 && cp <= 0x061A) return true;
  if (cp >= 0x06D6 && cp <= 0x06DC) return true;
  if (cp >= 0x06DF && cp <= 0x06E4) return true;
  if (cp == 0x06E7 || cp == 0x06E8) return true;
  if (cp >= 0x06EA && cp <= 0x06ED) return true;
  return cp == unicode::kSuperscriptAlef;
}

}  // namespace tashkil
