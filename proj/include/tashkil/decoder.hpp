#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tashkil/analyzer.hpp"
#include "tashkil/bundle.hpp"
#include "tashkil/eval.hpp"
#include "tashkil/text.hpp"
#include "tashkil/viterbi.hpp"

namespace tashkil {

// Full per-sentence pipeline: lattice construction, character fallback for
// unanalyzed columns, Viterbi decoding. Unanalyzed words join the lattice as
// the singleton candidate the character model produced, so sentence-level
// transitions still flow through them (with UNK mass where unseen).
inline SystemOutput diacritize_sentence_traced(const Sentence& s,
                                               const TrainedBundle& bundle,
                                               const CandidateGenerator& gen,
                                               ModelView view) {
  SystemOutput out;
  if (s.words.empty()) return out;

  Lattice lattice = build_lattice(gen, s, view);
  out.origins.assign(lattice.columns.size(), WordOrigin::Lattice);
  out.candidates.reserve(lattice.columns.size());
  for (std::size_t t = 0; t < lattice.columns.size(); ++t) {
    auto& col = lattice.columns[t];
    out.candidates.push_back(col.candidates);
    if (!col.analyzed) {
      col.candidates = {decode_fallback_word(col.word, bundle.char_model)};
      out.origins[t] = WordOrigin::Fallback;
    }
  }

  const HmmModel& model =
      view == ModelView::Model1 ? bundle.model1 : bundle.model2;
  DecodePath path = viterbi_decode(lattice, model);
  out.words = std::move(path.states);
  out.score = path.score;
  return out;
}

inline std::vector<VowelizedWord> diacritize_sentence(
    const Sentence& s, const TrainedBundle& bundle,
    const CandidateGenerator& gen, ModelView view) {
  return diacritize_sentence_traced(s, bundle, gen, view).words;
}

// Normalize, segment, decode sentence by sentence, and splice the vowelized
// words back over their source spans. Everything outside Arabic word tokens
// (punctuation, whitespace, non-Arabic tokens) is preserved as-is.
inline std::u32string diacritize_text(
    std::u32string_view input, const TrainedBundle& bundle,
    const CandidateGenerator& gen, ModelView view,
    const std::u32string& delims = default_delimiters()) {
  const std::u32string normalized = normalize_text(input);
  std::vector<std::pair<Span, std::u32string>> patches;
  for (const Sentence& s : segment(normalized, delims)) {
    const auto words = diacritize_sentence(s, bundle, gen, view);
    for (std::size_t j = 0; j < words.size(); ++j)
      patches.emplace_back(s.word_spans[j], vowelized_text(words[j]));
  }
  std::u32string out;
  out.reserve(normalized.size() * 2);
  std::size_t pos = 0;
  for (const auto& [span, replacement] : patches) {
    out.append(normalized, pos, span.begin - pos);
    out += replacement;
    pos = span.end;
  }
  out.append(normalized, pos, normalized.size() - pos);
  return out;
}

// Adapter for the evaluation harness.
inline SystemUnderTest make_system(const TrainedBundle& bundle,
                                   const CandidateGenerator& gen,
                                   ModelView view) {
  return [&bundle, &gen, view](const Sentence& s) {
    return diacritize_sentence_traced(s, bundle, gen, view);
  };
}

}  // namespace tashkil
