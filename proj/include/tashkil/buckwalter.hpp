#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tashkil/errors.hpp"

namespace tashkil {

// Standard Buckwalter transliteration: a bijection between Arabic code
// points and printable ASCII. Space maps to itself so whole sentences can
// round-trip.
inline const std::vector<std::pair<char32_t, char>>& buckwalter_table() {
  static const std::vector<std::pair<char32_t, char>> table = {
      {0x0621, '\''},  // hamza
      {0x0622, '|'},   // alef with madda
      {0x0623, '>'},   // alef with hamza above
      {0x0624, '&'},   // waw with hamza
      {0x0625, '<'},   // alef with hamza below
      {0x0626, '}'},   // yeh with hamza
      {0x0627, 'A'},   // alef
      {0x0628, 'b'},   // beh
      {0x0629, 'p'},   // teh marbuta
      {0x062A, 't'},   // teh
      {0x062B, 'v'},   // theh
      {0x062C, 'j'},   // jeem
      {0x062D, 'H'},   // hah
      {0x062E, 'x'},   // khah
      {0x062F, 'd'},   // dal
      {0x0630, '*'},   // thal
      {0x0631, 'r'},   // reh
      {0x0632, 'z'},   // zain
      {0x0633, 's'},   // seen
      {0x0634, '$'},   // sheen
      {0x0635, 'S'},   // sad
      {0x0636, 'D'},   // dad
      {0x0637, 'T'},   // tah
      {0x0638, 'Z'},   // zah
      {0x0639, 'E'},   // ain
      {0x063A, 'g'},   // ghain
      {0x0640, '_'},   // tatweel
      {0x0641, 'f'},   // feh
      {0x0642, 'q'},   // qaf
      {0x0643, 'k'},   // kaf
      {0x0644, 'l'},   // lam
      {0x0645, 'm'},   // meem
      {0x0646, 'n'},   // noon
      {0x0647, 'h'},   // heh
      {0x0648, 'w'},   // waw
      {0x0649, 'Y'},   // alef maksura
      {0x064A, 'y'},   // yeh
      {0x064B, 'F'},   // fathatan
      {0x064C, 'N'},   // dammatan
      {0x064D, 'K'},   // kasratan
      {0x064E, 'a'},   // fatha
      {0x064F, 'u'},   // damma
      {0x0650, 'i'},   // kasra
      {0x0651, '~'},   // shadda
      {0x0652, 'o'},   // sukun
      {0x0670, '`'},   // superscript alef
      {0x0671, '{'},   // alef wasla
      {0x067E, 'P'},   // peh
      {0x0686, 'J'},   // tcheh
      {0x06A4, 'V'},   // veh
      {0x06AF, 'G'},   // gaf
  };
  return table;
}

inline std::string buckwalter_encode(std::u32string_view arabic) {
  static const auto* to_ascii = [] {
    auto* m = new std::unordered_map<char32_t, char>;
    for (auto [cp, c] : buckwalter_table()) (*m)[cp] = c;
    return m;
  }();
  std::string out;
  out.reserve(arabic.size());
  for (std::size_t i = 0; i < arabic.size(); ++i) {
    const char32_t cp = arabic[i];
    if (cp == U' ') {
      out.push_back(' ');
      continue;
    }
    auto it = to_ascii->find(cp);
    if (it == to_ascii->end())
      throw UnmappableChar("no Buckwalter mapping for U+" +
                               std::to_string(static_cast<unsigned>(cp)),
                           i);
    out.push_back(it->second);
  }
  return out;
}

inline std::u32string buckwalter_decode(std::string_view ascii) {
  static const auto* to_arabic = [] {
    auto* m = new std::unordered_map<char, char32_t>;
    for (auto [cp, c] : buckwalter_table()) (*m)[c] = cp;
    return m;
  }();
  std::u32string out;
  out.reserve(ascii.size());
  for (std::size_t i = 0; i < ascii.size(); ++i) {
    const char c = ascii[i];
    if (c == ' ') {
      out.push_back(U' ');
      continue;
    }
    auto it = to_arabic->find(c);
    if (it == to_arabic->end())
      throw UnmappableChar(std::string("no Arabic mapping for '") + c + "'",
                           i);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace tashkil
