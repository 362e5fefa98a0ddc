#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tashkil/diacritics.hpp"
#include "tashkil/errors.hpp"
#include "tashkil/utf8.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

struct Vocab {
  std::vector<std::string> items;
  std::unordered_map<std::string, std::int32_t, StringHash, std::equal_to<>>
      index;

  std::int32_t add(const std::string& item) {
    auto [it, inserted] = index.try_emplace(item,
                                            static_cast<std::int32_t>(items.size()));
    if (inserted) items.push_back(item);
    return it->second;
  }

  std::int32_t find(std::string_view item) const {
    auto it = index.find(item);
    return it == index.end() ? -1 : it->second;
  }

  std::int32_t size() const { return static_cast<std::int32_t>(items.size()); }

  bool operator==(const Vocab& other) const { return items == other.items; }
};

// One smoothed distribution row. Seen outcomes carry explicit log-probs; all
// unseen outcomes share the single UNK bucket stored in `floor`, so that
// sum(exp(entries)) + exp(floor) == 1 whenever the row had any mass.
struct SparseRow {
  double floor = kLogZero;
  std::vector<std::pair<std::int32_t, double>> entries;  // sorted by index

  double at(std::int32_t idx) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), idx,
        [](const auto& e, std::int32_t i) { return e.first < i; });
    return (it != entries.end() && it->first == idx) ? it->second : floor;
  }

  bool operator==(const SparseRow&) const = default;
};

enum class EmissionKind : std::uint8_t {
  Table,       // smoothed Pr(obs | state) counts
  StripMatch,  // Pr(obs | state) = 1 iff state strips to obs (first model)
};

struct SmoothingParams {
  double delta = 0.1;

  bool operator==(const SmoothingParams&) const = default;
};

// First-order HMM over string-keyed vocabularies, all values in log space.
struct HmmModel {
  Vocab hidden;
  Vocab observed;
  SparseRow initial;                  // indexed by hidden state
  std::vector<SparseRow> transitions; // one row per hidden state
  std::vector<SparseRow> emissions;   // Table kind only
  EmissionKind emission_kind = EmissionKind::Table;
  SmoothingParams smoothing;
  std::vector<std::string> stripped;  // StripMatch: per-state observation key

  // Rows of unknown states and of states with no outgoing counts fall back
  // to a uniform guess over vocab + UNK.
  double unknown_transition() const {
    return -std::log(static_cast<double>(hidden.size()) + 1.0);
  }
  double unknown_emission() const {
    return -std::log(static_cast<double>(observed.size()) + 1.0);
  }

  double initial_logprob(std::string_view state) const {
    const auto idx = hidden.find(state);
    return idx < 0 ? initial.floor : initial.at(idx);
  }

  double transition_logprob(std::string_view from, std::string_view to) const {
    const auto i = hidden.find(from);
    if (i < 0) return unknown_transition();
    const auto& row = transitions[static_cast<std::size_t>(i)];
    const auto j = hidden.find(to);
    return j < 0 ? row.floor : row.at(j);
  }

  double emission_logprob(std::string_view state, std::string_view obs) const {
    if (emission_kind == EmissionKind::StripMatch) {
      const auto i = hidden.find(state);
      if (i >= 0) return stripped[static_cast<std::size_t>(i)] == obs ? 0.0 : kLogZero;
      const std::string bare = utf8_encode(strip_text(utf8_decode(state)));
      return bare == obs ? 0.0 : kLogZero;
    }
    const auto i = hidden.find(state);
    if (i < 0) return unknown_emission();
    const auto& row = emissions[static_cast<std::size_t>(i)];
    const auto k = observed.find(obs);
    return k < 0 ? row.floor : row.at(k);
  }

  // Checks that every estimated distribution still sums to one. Rows without
  // entries never had outgoing mass and only carry the uniform fallback.
  void validate(double tol = 1e-9) const {
    const auto check_row = [&](const SparseRow& row, std::int32_t columns,
                               const char* what) {
      if (row.entries.empty()) return;
      double sum = row.floor == kLogZero ? 0.0 : std::exp(row.floor);
      std::int32_t prev = -1;
      for (const auto& [idx, lp] : row.entries) {
        if (idx < 0 || idx >= columns)
          throw CorruptTable(std::string(what) + ": index out of range");
        if (idx <= prev)
          throw CorruptTable(std::string(what) + ": entries not sorted");
        prev = idx;
        sum += std::exp(lp);
      }
      if (std::abs(sum - 1.0) > tol)
        throw CorruptTable(std::string(what) + ": row sums to " +
                           std::to_string(sum));
    };
    check_row(initial, hidden.size(), "initial");
    for (const auto& row : transitions) check_row(row, hidden.size(), "transition");
    for (const auto& row : emissions) check_row(row, observed.size(), "emission");
    if (emission_kind == EmissionKind::StripMatch &&
        stripped.size() != static_cast<std::size_t>(hidden.size()))
      throw CorruptTable("strip cache size mismatch");
  }

  bool operator==(const HmmModel&) const = default;
};

namespace detail {

using CountMap = std::map<std::string, std::uint64_t>;

struct HmmCounts {
  CountMap initial;
  std::map<std::string, CountMap> transitions;
  std::map<std::string, CountMap> emissions;
  std::set<std::string> hidden;
  std::set<std::string> observed;
};

// Add-delta row: seen outcomes get (c + delta) / Z, the UNK bucket gets
// delta / Z with Z = C + delta * (seen + 1).
inline SparseRow smooth_row(const CountMap& counts, const Vocab& columns,
                            double delta) {
  SparseRow row;
  std::uint64_t total = 0;
  for (const auto& [key, n] : counts) total += n;
  const double denom = static_cast<double>(total) +
                       delta * (static_cast<double>(counts.size()) + 1.0);
  row.floor = delta > 0.0 ? std::log(delta / denom) : kLogZero;
  row.entries.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    const auto idx = columns.find(key);
    row.entries.emplace_back(idx,
                             std::log((static_cast<double>(n) + delta) / denom));
  }
  std::sort(row.entries.begin(), row.entries.end());
  return row;
}

inline HmmModel build_model(const HmmCounts& counts, double delta,
                            EmissionKind kind) {
  HmmModel m;
  m.smoothing.delta = delta;
  m.emission_kind = kind;
  for (const auto& key : counts.hidden) m.hidden.add(key);
  for (const auto& key : counts.observed) m.observed.add(key);

  m.initial = smooth_row(counts.initial, m.hidden, delta);

  m.transitions.resize(static_cast<std::size_t>(m.hidden.size()));
  for (std::int32_t i = 0; i < m.hidden.size(); ++i) {
    auto it = counts.transitions.find(m.hidden.items[static_cast<std::size_t>(i)]);
    if (it != counts.transitions.end())
      m.transitions[static_cast<std::size_t>(i)] =
          smooth_row(it->second, m.hidden, delta);
    else
      m.transitions[static_cast<std::size_t>(i)].floor = m.unknown_transition();
  }

  if (kind == EmissionKind::Table) {
    m.emissions.resize(static_cast<std::size_t>(m.hidden.size()));
    for (std::int32_t i = 0; i < m.hidden.size(); ++i) {
      auto it = counts.emissions.find(m.hidden.items[static_cast<std::size_t>(i)]);
      if (it != counts.emissions.end())
        m.emissions[static_cast<std::size_t>(i)] =
            smooth_row(it->second, m.observed, delta);
      else
        m.emissions[static_cast<std::size_t>(i)].floor = m.unknown_emission();
    }
  } else {
    m.stripped.reserve(static_cast<std::size_t>(m.hidden.size()));
    for (const auto& key : m.hidden.items)
      m.stripped.push_back(utf8_encode(strip_text(utf8_decode(key))));
  }
  return m;
}

}  // namespace detail

// First model: hidden states are the vowelized words themselves. Emissions
// are structural (a vowelized word emits exactly its bare form), so only
// transitions and the initial distribution are estimated and smoothed.
inline HmmModel estimate_model1(
    const std::vector<std::vector<VowelizedWord>>& sentences,
    double delta = 0.1) {
  detail::HmmCounts counts;
  bool any = false;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    any = true;
    std::string prev;
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      const std::string state = surface_key(sentence[t]);
      const std::string obs = word_key(strip_diacritics(sentence[t]));
      counts.hidden.insert(state);
      counts.observed.insert(obs);
      if (t == 0)
        counts.initial[state] += 1;
      else
        counts.transitions[prev][state] += 1;
      prev = state;
    }
  }
  if (!any) throw EmptyCorpus("no sentences to estimate the word model from");
  return detail::build_model(counts, delta, EmissionKind::StripMatch);
}

// Second model: hidden states are diacritic patterns; emissions are the
// smoothed joint counts Pr(bare word | pattern).
inline HmmModel estimate_model2(
    const std::vector<std::vector<VowelizedWord>>& sentences,
    double delta = 0.1) {
  detail::HmmCounts counts;
  bool any = false;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    any = true;
    std::string prev;
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      const std::string state = pattern_key(extract_pattern(sentence[t]));
      const std::string obs = word_key(strip_diacritics(sentence[t]));
      counts.hidden.insert(state);
      counts.observed.insert(obs);
      counts.emissions[state][obs] += 1;
      if (t == 0)
        counts.initial[state] += 1;
      else
        counts.transitions[prev][state] += 1;
      prev = state;
    }
  }
  if (!any) throw EmptyCorpus("no sentences to estimate the pattern model from");
  return detail::build_model(counts, delta, EmissionKind::Table);
}

// Character fallback: hidden states are the marks, observations the letters;
// chains run over the positions of each word.
inline HmmModel estimate_char_model(const std::vector<VowelizedWord>& words,
                                    double delta = 0.1) {
  detail::HmmCounts counts;
  bool any = false;
  for (const auto& word : words) {
    if (word.letters.empty()) continue;
    any = true;
    std::string prev;
    for (std::size_t t = 0; t < word.letters.size(); ++t) {
      const std::string state{mark_token(word.marks[t])};
      std::string obs;
      utf8_append(obs, word.letters[t]);
      counts.hidden.insert(state);
      counts.observed.insert(obs);
      counts.emissions[state][obs] += 1;
      if (t == 0)
        counts.initial[state] += 1;
      else
        counts.transitions[prev][state] += 1;
      prev = state;
    }
  }
  if (!any) throw EmptyCorpus("no words to estimate the character model from");
  return detail::build_model(counts, delta, EmissionKind::Table);
}

inline HmmModel estimate_char_model(
    const std::vector<std::vector<VowelizedWord>>& sentences,
    double delta = 0.1) {
  std::vector<VowelizedWord> words;
  for (const auto& s : sentences) words.insert(words.end(), s.begin(), s.end());
  return estimate_char_model(words, delta);
}

}  // namespace tashkil
