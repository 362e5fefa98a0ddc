#pragma once

// Shared fixtures and independent oracles for the test suites. The brute
// force searches here deliberately re-derive results by full enumeration so
// the dynamic-programming implementations have something honest to match.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tashkil/tashkil.hpp"

namespace testsupport {

using namespace tashkil;

// Buckwalter shorthands for fixtures.
inline std::u32string bw(const std::string& s) { return buckwalter_decode(s); }
inline VowelizedWord vw(const std::string& s) { return from_buckwalter(s); }
inline UnvowelizedWord uw(const std::string& s) {
  return {buckwalter_decode(s)};
}

inline std::vector<VowelizedWord> vws(const std::vector<std::string>& v) {
  std::vector<VowelizedWord> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(vw(s));
  return out;
}

// --- Brute-force Viterbi oracle -------------------------------------------

struct BestPath {
  std::vector<std::int32_t> choice;
  double score = -std::numeric_limits<double>::infinity();
  bool found = false;
};

// Scores every path through the cross product of the columns. Independent of
// the phi/psi recursion: nothing is shared with viterbi_decode except the
// model query functions.
inline BestPath enumerate_best(const Lattice& lattice, const HmmModel& model) {
  const std::size_t n = lattice.columns.size();
  std::vector<std::vector<std::string>> keys(n);
  std::vector<std::string> obs(n);
  for (std::size_t t = 0; t < n; ++t) {
    obs[t] = word_key(lattice.columns[t].word);
    for (const auto& cand : lattice.columns[t].candidates)
      keys[t].push_back(lattice.view == ModelView::Model1
                            ? surface_key(cand)
                            : pattern_key(extract_pattern(cand)));
  }
  BestPath best;
  std::vector<std::int32_t> idx(n, 0);
  while (true) {
    double score = model.initial_logprob(keys[0][(std::size_t)idx[0]]) +
                   model.emission_logprob(keys[0][(std::size_t)idx[0]], obs[0]);
    for (std::size_t t = 1; t < n; ++t) {
      score += model.transition_logprob(keys[t - 1][(std::size_t)idx[t - 1]],
                                        keys[t][(std::size_t)idx[t]]);
      score += model.emission_logprob(keys[t][(std::size_t)idx[t]], obs[t]);
    }
    if (score > best.score || !best.found) {
      if (score > -std::numeric_limits<double>::infinity()) {
        best.score = score;
        best.choice = idx;
        best.found = true;
      }
    }
    // odometer, rightmost column fastest
    std::size_t t = n;
    while (t > 0) {
      --t;
      if (++idx[t] < static_cast<std::int32_t>(keys[t].size())) break;
      idx[t] = 0;
      if (t == 0) return best;
    }
  }
}

// Brute force over all 15^len mark assignments for the character fallback.
inline BestPath enumerate_char_best(const UnvowelizedWord& w,
                                    const HmmModel& char_model) {
  const std::size_t n = w.letters.size();
  const auto marks = all_marks();
  std::vector<std::string> obs(n);
  for (std::size_t t = 0; t < n; ++t) {
    obs[t].clear();
    utf8_append(obs[t], w.letters[t]);
  }
  BestPath best;
  std::vector<std::int32_t> idx(n, 0);
  while (true) {
    double score =
        char_model.initial_logprob(mark_token(marks[(std::size_t)idx[0]])) +
        char_model.emission_logprob(mark_token(marks[(std::size_t)idx[0]]),
                                    obs[0]);
    for (std::size_t t = 1; t < n; ++t) {
      score += char_model.transition_logprob(
          mark_token(marks[(std::size_t)idx[t - 1]]),
          mark_token(marks[(std::size_t)idx[t]]));
      score += char_model.emission_logprob(mark_token(marks[(std::size_t)idx[t]]),
                                           obs[t]);
    }
    if (!best.found || score > best.score) {
      best.score = score;
      best.choice = idx;
      best.found = true;
    }
    std::size_t t = n;
    while (t > 0) {
      --t;
      if (++idx[t] < kMarkCount) break;
      idx[t] = 0;
      if (t == 0) return best;
    }
  }
}

// --- Random valid models and lattices --------------------------------------

// A smoothed row over the given columns: random weights plus an UNK bucket,
// normalized so seen entries + bucket sum to one.
inline SparseRow random_row(const std::vector<std::int32_t>& columns,
                            std::mt19937& rng) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::uniform_real_distribution<double> bucket(0.01, 0.3);
  SparseRow row;
  double total = 0.0;
  std::vector<double> w(columns.size());
  for (auto& x : w) {
    x = weight(rng);
    total += x;
  }
  const double unk = bucket(rng);
  total += unk;
  row.floor = std::log(unk / total);
  for (std::size_t i = 0; i < columns.size(); ++i)
    row.entries.emplace_back(columns[i], std::log(w[i] / total));
  std::sort(row.entries.begin(), row.entries.end());
  return row;
}

// Valid model over explicit vocabularies: every row normalizes, some targets
// are randomly left unseen so the UNK buckets get exercised.
inline HmmModel random_model(const std::vector<std::string>& hidden,
                             const std::vector<std::string>& observed,
                             std::mt19937& rng,
                             EmissionKind kind = EmissionKind::Table) {
  HmmModel m;
  m.emission_kind = kind;
  for (const auto& s : hidden) m.hidden.add(s);
  for (const auto& s : observed) m.observed.add(s);

  const auto pick_columns = [&](std::int32_t total) {
    std::vector<std::int32_t> cols;
    std::bernoulli_distribution keep(0.8);
    for (std::int32_t i = 0; i < total; ++i)
      if (keep(rng)) cols.push_back(i);
    if (cols.empty()) cols.push_back(0);
    return cols;
  };

  m.initial = random_row(pick_columns(m.hidden.size()), rng);
  m.transitions.resize(hidden.size());
  for (auto& row : m.transitions)
    row = random_row(pick_columns(m.hidden.size()), rng);
  if (kind == EmissionKind::Table) {
    m.emissions.resize(hidden.size());
    for (auto& row : m.emissions)
      row = random_row(pick_columns(m.observed.size()), rng);
  } else {
    for (const auto& key : m.hidden.items)
      m.stripped.push_back(utf8_encode(strip_text(utf8_decode(key))));
  }
  return m;
}

inline const std::u32string& letter_pool() {
  static const std::u32string pool = bw("btjHdrszSTEfqklmnhwyx$gv");
  return pool;
}

// Random lattice of 1..5 columns with 1..4 candidates each; all candidates
// of a column share the column's letters and no two share a mark vector.
inline Lattice random_lattice(std::mt19937& rng, ModelView view) {
  std::uniform_int_distribution<int> ncols(1, 5);
  std::uniform_int_distribution<int> ncands(1, 4);
  std::uniform_int_distribution<int> wordlen(1, 3);
  std::uniform_int_distribution<std::size_t> letter(0, letter_pool().size() - 1);
  std::uniform_int_distribution<int> markpick(0, kMarkCount - 1);

  Lattice lattice;
  lattice.view = view;
  const int n = ncols(rng);
  for (int t = 0; t < n; ++t) {
    LatticeColumn col;
    const int len = wordlen(rng);
    for (int i = 0; i < len; ++i)
      col.word.letters.push_back(letter_pool()[letter(rng)]);
    const int k = ncands(rng);
    std::set<std::vector<DiacriticMark>> seen;
    while (static_cast<int>(col.candidates.size()) < k) {
      std::vector<DiacriticMark> marks(static_cast<std::size_t>(len));
      for (auto& mk : marks) mk = all_marks()[(std::size_t)markpick(rng)];
      if (!seen.insert(marks).second) continue;
      col.candidates.push_back({col.word.letters, marks});
    }
    col.analyzed = true;
    lattice.columns.push_back(std::move(col));
  }
  return lattice;
}

// Model whose vocabularies cover the lattice (candidates occasionally left
// out to exercise the unknown-state policy) plus a few extra states.
inline HmmModel random_model_for(const Lattice& lattice, std::mt19937& rng) {
  std::set<std::string> hidden, observed;
  std::bernoulli_distribution drop(0.15);
  for (const auto& col : lattice.columns) {
    observed.insert(word_key(col.word));
    for (const auto& cand : col.candidates) {
      const std::string key = lattice.view == ModelView::Model1
                                  ? surface_key(cand)
                                  : pattern_key(extract_pattern(cand));
      if (!drop(rng)) hidden.insert(key);
    }
  }
  hidden.insert(lattice.view == ModelView::Model1 ? surface_key(vw("da"))
                                                  : std::string("a.u"));
  observed.insert(word_key(uw("d")));
  if (hidden.empty()) hidden.insert("a.u");
  return random_model(std::vector<std::string>(hidden.begin(), hidden.end()),
                      std::vector<std::string>(observed.begin(), observed.end()),
                      rng, EmissionKind::Table);
}

}  // namespace testsupport
