#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tashkil/errors.hpp"
#include "tashkil/text.hpp"
#include "tashkil/utf8.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

struct LexiconEntry {
  std::u32string key;                     // diacritic-free, normalized
  std::uint64_t total_count = 0;          // stripped occurrences seen at build
  std::vector<VowelizedWord> candidates;  // sorted by Buckwalter form

  bool operator==(const LexiconEntry&) const = default;
};

// Dictionary of frequent words with their observed vowelizations; the
// shipped out-of-context candidate source.
class Lexicon {
 public:
  void insert(LexiconEntry entry) {
    entries_[entry.key] = std::move(entry);
  }

  const std::vector<VowelizedWord>* lookup(const UnvowelizedWord& w) const {
    auto it = entries_.find(w.letters);
    return it == entries_.end() ? nullptr : &it->second.candidates;
  }

  const LexiconEntry* entry(const UnvowelizedWord& w) const {
    auto it = entries_.find(w.letters);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::map<std::u32string, LexiconEntry>& entries() const {
    return entries_;
  }

  std::vector<std::string>& provenance() { return provenance_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  bool operator==(const Lexicon&) const = default;

  // UTF-8 TSV: "#version 1", optional "#source" lines, then
  // key<TAB>count<TAB>cand1|cand2|... with candidates carrying diacritics.
  std::string serialize() const {
    std::string out = "#version 1\n";
    for (const auto& src : provenance_) out += "#source " + src + "\n";
    for (const auto& [key, entry] : entries_) {
      out += utf8_encode(key);
      out += '\t';
      out += std::to_string(entry.total_count);
      out += '\t';
      for (std::size_t i = 0; i < entry.candidates.size(); ++i) {
        if (i) out += '|';
        out += utf8_encode(vowelized_text(entry.candidates[i]));
      }
      out += '\n';
    }
    return out;
  }

  void save(const std::string& path) const {
    write_file_bytes(path, serialize());
  }

  static Lexicon parse(std::string_view bytes) {
    Lexicon lex;
    std::istringstream in{std::string(bytes)};
    std::string line;
    if (!std::getline(in, line) || line != "#version 1")
      throw FormatVersionMismatch("lexicon file: expected '#version 1'");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (line.rfind("#source ", 0) == 0) {
        lex.provenance_.push_back(line.substr(8));
        continue;
      }
      const auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
      const auto tab1 = line.find('\t');
      const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                  : line.find('\t', tab1 + 1);
      if (tab2 == std::string::npos)
        throw CorruptTable("lexicon row needs three columns" + where());
      LexiconEntry entry;
      entry.key = utf8_decode(line.substr(0, tab1));
      try {
        entry.total_count = std::stoull(line.substr(tab1 + 1, tab2 - tab1 - 1));
      } catch (const std::exception&) {
        throw CorruptTable("bad count" + where());
      }
      std::string cands = line.substr(tab2 + 1);
      std::size_t pos = 0;
      while (pos <= cands.size()) {
        const auto bar = cands.find('|', pos);
        const auto piece =
            cands.substr(pos, bar == std::string::npos ? bar : bar - pos);
        if (!piece.empty()) {
          VowelizedWord v = parse_vowelized(utf8_decode(piece));
          if (v.letters != entry.key)
            throw CorruptTable("candidate does not strip to key" + where());
          entry.candidates.push_back(std::move(v));
        }
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
      if (entry.candidates.empty())
        throw CorruptTable("entry without candidates" + where());
      lex.entries_[entry.key] = std::move(entry);
    }
    return lex;
  }

  static Lexicon load(const std::string& path) {
    return parse(read_file_bytes(path));
  }

 private:
  std::map<std::u32string, LexiconEntry> entries_;
  std::vector<std::string> provenance_;
};

using FrequencyMap = std::unordered_map<std::u32string, std::uint64_t>;

// Token counts per diacritic-stripped form. Input may be vowelized or bare.
inline void count_frequencies_into(FrequencyMap& counts,
                                   std::u32string_view text) {
  const std::u32string normalized = normalize_text(text);
  for (const Token& tok : tokenize(normalized)) {
    if (!tok.arabic) continue;
    counts[strip_text(tok.text)] += 1;
  }
}

inline FrequencyMap count_frequencies(std::u32string_view text) {
  FrequencyMap counts;
  count_frequencies_into(counts, text);
  return counts;
}

// Line-streamed variant for whole corpora.
inline FrequencyMap count_frequencies(std::istream& in,
                                      Encoding enc = Encoding::Utf8) {
  if (!in) throw IoFailure("unreadable corpus stream");
  FrequencyMap counts;
  std::string line;
  while (std::getline(in, line)) count_frequencies_into(counts, decode_bytes(line, enc));
  if (in.bad()) throw IoFailure("corpus stream read error");
  return counts;
}

// Counts ordered by decreasing frequency; ties broken by key so that the
// top-k cut is reproducible.
inline std::vector<std::pair<std::u32string, std::uint64_t>> rank_frequencies(
    const FrequencyMap& counts) {
  std::vector<std::pair<std::u32string, std::uint64_t>> ranked(counts.begin(),
                                                               counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

// Union of each corpus's top-k words. Each list must already be sorted in
// decreasing count order.
inline std::set<std::u32string> merge_top_lists(
    const std::vector<std::vector<std::pair<std::u32string, std::uint64_t>>>&
        per_corpus_lists,
    std::size_t cutoff) {
  std::set<std::u32string> merged;
  for (const auto& list : per_corpus_lists) {
    const std::size_t take = std::min(cutoff, list.size());
    for (std::size_t i = 0; i < take; ++i) merged.insert(list[i].first);
  }
  return merged;
}

struct LexiconBuild {
  Lexicon lexicon;
  std::vector<std::u32string> unresolved;  // never observed vowelized
};

namespace detail {

struct VowelizationCounts {
  FrequencyMap key_counts;
  // key -> surface text -> count; only surfaces carrying at least one mark.
  std::map<std::u32string, std::map<std::u32string, std::uint64_t>> surfaces;
};

inline void scan_vowelizations(VowelizationCounts& acc,
                               const std::set<std::u32string>& wanted,
                               std::u32string_view text) {
  const std::u32string normalized = normalize_text(text);
  for (const Token& tok : tokenize(normalized)) {
    if (!tok.arabic) continue;
    const VowelizedWord v = parse_vowelized(tok.text);
    if (!wanted.contains(v.letters)) continue;
    acc.key_counts[v.letters] += 1;
    const bool marked = std::any_of(
        v.marks.begin(), v.marks.end(),
        [](DiacriticMark m) { return m != DiacriticMark::NoMark; });
    if (marked) acc.surfaces[v.letters][vowelized_text(v)] += 1;
  }
}

}  // namespace detail

// Assembles the lexicon: each wanted word gets the distinct vowelized
// surface forms observed at least min_count times; words never seen with a
// mark land on the unresolved list.
inline LexiconBuild attach_vowelizations(
    const std::set<std::u32string>& words,
    const std::vector<std::u32string>& vowelized_corpora,
    std::uint64_t min_count = 2) {
  detail::VowelizationCounts acc;
  for (const auto& corpus : vowelized_corpora)
    detail::scan_vowelizations(acc, words, corpus);

  LexiconBuild build;
  for (const auto& key : words) {
    std::vector<VowelizedWord> candidates;
    if (auto it = acc.surfaces.find(key); it != acc.surfaces.end()) {
      for (const auto& [surface, n] : it->second) {
        if (n < min_count) continue;
        candidates.push_back(parse_vowelized(surface));
      }
    }
    if (candidates.empty()) {
      build.unresolved.push_back(key);
      continue;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const VowelizedWord& a, const VowelizedWord& b) {
                return to_buckwalter(a) < to_buckwalter(b);
              });
    std::uint64_t total = 0;
    if (auto it = acc.key_counts.find(key); it != acc.key_counts.end())
      total = it->second;
    build.lexicon.insert({key, total, std::move(candidates)});
  }
  return build;
}

struct LexiconBuildOptions {
  std::size_t cutoff = 5000;      // per-corpus top-k
  std::uint64_t min_count = 2;    // occurrences a surface form needs
};

struct CorpusCount {
  std::string id;
  std::uint64_t tokens = 0;
  std::uint64_t distinct = 0;
};

struct LexiconBuildResult {
  Lexicon lexicon;
  std::vector<std::u32string> unresolved;
  std::vector<CorpusCount> per_corpus;
};

// Whole build: count each corpus separately, take the per-corpus top-k,
// merge, then attach the vowelizations observed across all corpora.
inline LexiconBuildResult build_lexicon(
    const std::vector<std::u32string>& corpora,
    const LexiconBuildOptions& opts = {},
    const std::vector<std::string>& ids = {}) {
  std::vector<std::vector<std::pair<std::u32string, std::uint64_t>>> ranked;
  LexiconBuildResult result;
  for (std::size_t c = 0; c < corpora.size(); ++c) {
    const FrequencyMap counts = count_frequencies(corpora[c]);
    CorpusCount cc;
    cc.id = c < ids.size() ? ids[c] : "corpus" + std::to_string(c + 1);
    cc.distinct = counts.size();
    for (const auto& [_, n] : counts) cc.tokens += n;
    result.per_corpus.push_back(std::move(cc));
    ranked.push_back(rank_frequencies(counts));
  }
  const auto merged = merge_top_lists(ranked, opts.cutoff);
  LexiconBuild build = attach_vowelizations(merged, corpora, opts.min_count);
  result.lexicon = std::move(build.lexicon);
  result.unresolved = std::move(build.unresolved);
  for (const auto& cc : result.per_corpus)
    result.lexicon.provenance().push_back(cc.id);
  return result;
}

}  // namespace tashkil
