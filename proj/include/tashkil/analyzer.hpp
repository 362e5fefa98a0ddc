#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tashkil/lexicon.hpp"
#include "tashkil/text.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

// Out-of-context candidate source: given a bare word, all vowelizations it
// could take. Implementations must be safe for concurrent read-only queries
// and every candidate must strip back to the query word.
class CandidateGenerator {
 public:
  virtual ~CandidateGenerator() = default;
  virtual std::vector<VowelizedWord> generate(const UnvowelizedWord& w) const = 0;
};

class LexiconGenerator final : public CandidateGenerator {
 public:
  explicit LexiconGenerator(const Lexicon& lex) : lex_(&lex) {}

  std::vector<VowelizedWord> generate(const UnvowelizedWord& w) const override {
    const auto* cands = lex_->lookup(w);
    return cands ? *cands : std::vector<VowelizedWord>{};
  }

 private:
  const Lexicon* lex_;
};

// Tries generators in order; the first non-empty answer wins. Lets an
// external analyzer back up the lexicon (or the reverse) without changing
// the pipeline.
class CompositeGenerator final : public CandidateGenerator {
 public:
  void add(const CandidateGenerator& gen) { parts_.push_back(&gen); }

  std::vector<VowelizedWord> generate(const UnvowelizedWord& w) const override {
    for (const auto* gen : parts_) {
      auto cands = gen->generate(w);
      if (!cands.empty()) return cands;
    }
    return {};
  }

 private:
  std::vector<const CandidateGenerator*> parts_;
};

// Queries a generator and sanitizes the answer: candidates that do not strip
// to the query are discarded, duplicates removed, order fixed to Buckwalter
// lexicographic. Generator failures surface as an empty set plus diagnostic.
inline std::vector<VowelizedWord> analyze(const CandidateGenerator& gen,
                                          const UnvowelizedWord& w,
                                          std::string* diagnostic = nullptr) {
  std::vector<VowelizedWord> cands;
  try {
    cands = gen.generate(w);
  } catch (const std::exception& e) {
    if (diagnostic) *diagnostic = e.what();
    return {};
  }
  std::erase_if(cands, [&](const VowelizedWord& v) { return v.letters != w.letters; });
  std::sort(cands.begin(), cands.end(),
            [](const VowelizedWord& a, const VowelizedWord& b) {
              return to_buckwalter(a) < to_buckwalter(b);
            });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

enum class ModelView { Model1, Model2 };

// One column per word; candidates are surface forms. Under the Model2 view
// each candidate stands for its diacritic pattern and the column holds one
// representative surface per distinct pattern.
struct LatticeColumn {
  UnvowelizedWord word;
  std::vector<VowelizedWord> candidates;
  bool analyzed = false;  // false iff candidates is empty
};

struct Lattice {
  std::vector<LatticeColumn> columns;
  ModelView view = ModelView::Model1;
};

inline Lattice build_lattice(const CandidateGenerator& gen, const Sentence& s,
                             ModelView view) {
  Lattice lattice;
  lattice.view = view;
  lattice.columns.reserve(s.words.size());
  for (const auto& word : s.words) {
    LatticeColumn col;
    col.word = word;
    col.candidates = analyze(gen, word);
    if (view == ModelView::Model2) {
      std::set<std::string> seen;
      std::vector<VowelizedWord> reps;
      for (auto& cand : col.candidates)
        if (seen.insert(pattern_key(extract_pattern(cand))).second)
          reps.push_back(std::move(cand));
      col.candidates = std::move(reps);
    }
    col.analyzed = !col.candidates.empty();
    lattice.columns.push_back(std::move(col));
  }
  return lattice;
}

}  // namespace tashkil
