#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tashkil/analyzer.hpp"
#include "tashkil/errors.hpp"
#include "tashkil/hmm.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

enum class WordOrigin : std::uint8_t {
  Lattice,      // chosen among the analyzer's candidates
  Fallback,     // produced by the character model
  Passthrough,  // non-Arabic token left untouched
};

struct DecodePath {
  std::vector<std::int32_t> choice;      // per column: candidate index
  std::vector<VowelizedWord> states;     // per column: chosen surface form
  std::vector<WordOrigin> origins;
  double score = 0.0;                    // total log-probability
};

namespace detail {

inline std::string lattice_state_key(const Lattice& lattice,
                                     const VowelizedWord& cand) {
  return lattice.view == ModelView::Model1
             ? surface_key(cand)
             : pattern_key(extract_pattern(cand));
}

}  // namespace detail

// Max-probability path through the lattice, one hidden state per column,
// by the standard phi/psi recursion:
//   phi(t, c) = max_{c'} [phi(t-1, c') + a(c' -> c)] + b_c(w_t)
// Ties pick the earliest candidate in column order. Throws EmptyColumn if a
// column has no candidates and AllPathsImpossible if every complete path
// scores -inf (possible only under hard structural emissions).
inline DecodePath viterbi_decode(const Lattice& lattice, const HmmModel& model) {
  const std::size_t n = lattice.columns.size();
  if (n == 0) return {};
  for (std::size_t t = 0; t < n; ++t)
    if (lattice.columns[t].candidates.empty())
      throw EmptyColumn("lattice column " + std::to_string(t) +
                        " has no candidates");

  std::vector<std::vector<std::string>> keys(n);
  std::vector<std::string> obs(n);
  for (std::size_t t = 0; t < n; ++t) {
    obs[t] = word_key(lattice.columns[t].word);
    keys[t].reserve(lattice.columns[t].candidates.size());
    for (const auto& cand : lattice.columns[t].candidates)
      keys[t].push_back(detail::lattice_state_key(lattice, cand));
  }

  std::vector<std::vector<double>> phi(n);
  std::vector<std::vector<std::int32_t>> psi(n);
  phi[0].resize(keys[0].size());
  psi[0].assign(keys[0].size(), -1);
  for (std::size_t j = 0; j < keys[0].size(); ++j)
    phi[0][j] = model.initial_logprob(keys[0][j]) +
                model.emission_logprob(keys[0][j], obs[0]);

  for (std::size_t t = 1; t < n; ++t) {
    phi[t].resize(keys[t].size());
    psi[t].resize(keys[t].size());
    for (std::size_t j = 0; j < keys[t].size(); ++j) {
      double best = kLogZero;
      std::int32_t best_prev = 0;
      for (std::size_t i = 0; i < keys[t - 1].size(); ++i) {
        const double cand = phi[t - 1][i] +
                            model.transition_logprob(keys[t - 1][i], keys[t][j]);
        if (cand > best) {
          best = cand;
          best_prev = static_cast<std::int32_t>(i);
        }
      }
      phi[t][j] = best + model.emission_logprob(keys[t][j], obs[t]);
      psi[t][j] = best_prev;
    }
  }

  double best = kLogZero;
  std::int32_t last = -1;
  for (std::size_t j = 0; j < keys[n - 1].size(); ++j) {
    if (phi[n - 1][j] > best) {
      best = phi[n - 1][j];
      last = static_cast<std::int32_t>(j);
    }
  }
  if (last < 0)
    throw AllPathsImpossible("every path through the lattice scores -inf");

  DecodePath path;
  path.score = best;
  path.choice.resize(n);
  path.choice[n - 1] = last;
  for (std::size_t t = n - 1; t > 0; --t)
    path.choice[t - 1] = psi[t][static_cast<std::size_t>(path.choice[t])];
  path.states.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    path.states.push_back(
        lattice.columns[t].candidates[static_cast<std::size_t>(path.choice[t])]);
  path.origins.assign(n, WordOrigin::Lattice);
  return path;
}

// Character lattice for one word: a column per letter, one candidate per
// mark, in declaration order of the mark set. Under the Model2 view the
// state key of a one-letter candidate is exactly its mark token.
inline Lattice char_lattice(const UnvowelizedWord& w) {
  Lattice lattice;
  lattice.view = ModelView::Model2;
  lattice.columns.reserve(w.letters.size());
  for (char32_t letter : w.letters) {
    LatticeColumn col;
    col.word.letters = std::u32string(1, letter);
    col.analyzed = true;
    col.candidates.reserve(kMarkCount);
    for (DiacriticMark m : all_marks())
      col.candidates.push_back({std::u32string(1, letter), {m}});
    lattice.columns.push_back(std::move(col));
  }
  return lattice;
}

// Unconstrained per-letter decoding with the character model; the last
// resort for words the analyzer cannot vowelize.
inline VowelizedWord decode_fallback_word(const UnvowelizedWord& w,
                                          const HmmModel& char_model) {
  VowelizedWord out{w.letters, {}};
  out.marks.reserve(w.letters.size());
  if (w.letters.empty()) return out;
  const DecodePath path = viterbi_decode(char_lattice(w), char_model);
  for (const auto& state : path.states) out.marks.push_back(state.marks[0]);
  return out;
}

}  // namespace tashkil
