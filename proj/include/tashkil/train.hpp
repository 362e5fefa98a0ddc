#pragma once

#include <set>
#include <string>
#include <vector>

#include "tashkil/bundle.hpp"
#include "tashkil/hmm.hpp"
#include "tashkil/text.hpp"
#include "tashkil/utf8.hpp"

namespace tashkil {

struct TrainOptions {
  double delta = 0.1;
  double split = 0.9;  // share of sentences used for estimation
};

struct TrainResult {
  TrainedBundle bundle;
  std::vector<std::vector<VowelizedWord>> held_out;
};

namespace detail {

inline std::string sentence_fingerprint(const std::vector<VowelizedWord>& s) {
  std::string key;
  for (const auto& w : s) {
    key += utf8_encode(vowelized_text(w));
    key += ' ';
  }
  return key;
}

}  // namespace detail

// Splits sentences by content hash (so the partition survives any reordering
// of the corpus) and estimates all three models on the training share.
inline TrainResult train_bundle(
    const std::vector<std::vector<VowelizedWord>>& sentences,
    const TrainOptions& opts = {}, std::uint64_t lexicon_hash = 0) {
  const auto threshold = static_cast<std::uint64_t>(opts.split * 10000.0);
  std::vector<std::vector<VowelizedWord>> training;
  TrainResult result;
  for (const auto& s : sentences) {
    if (s.empty()) continue;
    const std::uint64_t h = fnv1a(detail::sentence_fingerprint(s));
    if (h % 10000 < threshold)
      training.push_back(s);
    else
      result.held_out.push_back(s);
  }
  if (training.empty())
    throw EmptyCorpus("no sentences left for training after the split");

  result.bundle.model1 = estimate_model1(training, opts.delta);
  result.bundle.model2 = estimate_model2(training, opts.delta);
  result.bundle.char_model = estimate_char_model(training, opts.delta);
  result.bundle.lexicon_hash = lexicon_hash;

  result.bundle.stats.sentences = training.size();
  std::set<std::string> types;
  for (const auto& s : training) {
    result.bundle.stats.tokens += s.size();
    for (const auto& w : s) types.insert(surface_key(w));
  }
  result.bundle.stats.types = types.size();
  return result;
}

}  // namespace tashkil
