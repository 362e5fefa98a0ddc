#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "tashkil/buckwalter.hpp"
#include "tashkil/errors.hpp"
#include "tashkil/text.hpp"
#include "tashkil/viterbi.hpp"
#include "tashkil/words.hpp"

namespace tashkil {

// True iff any position's marks differ; the final position is excluded when
// ignore_final (the "2" variants of the error rates).
inline bool word_error(const VowelizedWord& ref, const VowelizedWord& hyp,
                       bool ignore_final) {
  if (ref.letters != hyp.letters)
    throw LetterMismatch("reference '" + to_buckwalter(ref) +
                         "' vs hypothesis '" + to_buckwalter(hyp) + "'");
  std::size_t n = ref.marks.size();
  if (ignore_final && n > 0) --n;
  for (std::size_t i = 0; i < n; ++i)
    if (ref.marks[i] != hyp.marks[i]) return true;
  return false;
}

// (mismatched, compared) mark positions; with ignore_final the last position
// leaves both the numerator and the denominator.
inline std::pair<std::uint64_t, std::uint64_t> char_errors(
    const VowelizedWord& ref, const VowelizedWord& hyp, bool ignore_final) {
  if (ref.letters != hyp.letters)
    throw LetterMismatch("reference '" + to_buckwalter(ref) +
                         "' vs hypothesis '" + to_buckwalter(hyp) + "'");
  std::size_t n = ref.marks.size();
  if (ignore_final && n > 0) --n;
  std::uint64_t mismatched = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (ref.marks[i] != hyp.marks[i]) ++mismatched;
  return {mismatched, n};
}

// What one decode run must expose for scoring and error attribution: the
// chosen surfaces, where each came from, and the out-of-context candidates
// of each column (empty where the word was unanalyzed).
struct SystemOutput {
  std::vector<VowelizedWord> words;
  std::vector<WordOrigin> origins;
  std::vector<std::vector<VowelizedWord>> candidates;
  double score = 0.0;
};

using SystemUnderTest = std::function<SystemOutput(const Sentence&)>;

struct EvalOptions {
  bool skip_bare_ref = false;  // drop words whose reference carries no mark
  const std::vector<std::string>* sentence_labels = nullptr;  // diagnostics
};

struct EvalReport {
  double wer1 = 0, wer2 = 0, der1 = 0, der2 = 0;
  std::uint64_t words_evaluated = 0;
  std::uint64_t chars_evaluated = 0;  // DER1 denominator
  std::uint64_t wrong_words = 0;      // WER1 numerator
  double throughput_wps = 0;
  // Over wrongly vowelized words (WER1 sense):
  double unanalyzed_pct = 0;
  double right_solution_absent_pct = 0;
  double viterbi_miss_pct = 0;
};

inline EvalReport evaluate_corpus(
    const std::vector<std::vector<VowelizedWord>>& refs,
    const SystemUnderTest& sut, const EvalOptions& opts = {}) {
  std::uint64_t wrong1 = 0, wrong2 = 0;
  std::uint64_t char_mm1 = 0, chars1 = 0, char_mm2 = 0, chars2 = 0;
  std::uint64_t words_eval = 0, words_decoded = 0;
  std::uint64_t unanalyzed = 0, absent = 0, miss = 0;
  std::chrono::steady_clock::duration elapsed{0};

  for (std::size_t k = 0; k < refs.size(); ++k) {
    const auto& ref = refs[k];
    if (ref.empty()) continue;
    const auto where = [&](std::size_t j) {
      std::string loc = opts.sentence_labels && k < opts.sentence_labels->size()
                            ? (*opts.sentence_labels)[k]
                            : "sentence " + std::to_string(k + 1);
      return loc + ", word " + std::to_string(j + 1);
    };

    Sentence s;
    s.words.reserve(ref.size());
    for (const auto& v : ref) s.words.push_back(strip_diacritics(v));

    const auto t0 = std::chrono::steady_clock::now();
    const SystemOutput out = sut(s);
    elapsed += std::chrono::steady_clock::now() - t0;
    words_decoded += ref.size();

    if (out.words.size() != ref.size() || out.origins.size() != ref.size() ||
        out.candidates.size() != ref.size())
      throw LetterMismatch("system returned " +
                           std::to_string(out.words.size()) + " words for " +
                           std::to_string(ref.size()) + " at " + where(0));

    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (ref[j].letters != out.words[j].letters)
        throw LetterMismatch("letters disagree at " + where(j) + ": '" +
                             to_buckwalter(ref[j]) + "' vs '" +
                             to_buckwalter(out.words[j]) + "'");
      if (opts.skip_bare_ref &&
          std::all_of(ref[j].marks.begin(), ref[j].marks.end(),
                      [](DiacriticMark m) { return m == DiacriticMark::NoMark; }))
        continue;
      ++words_eval;
      const bool e1 = word_error(ref[j], out.words[j], false);
      const bool e2 = word_error(ref[j], out.words[j], true);
      wrong1 += e1;
      wrong2 += e2;
      const auto [m1, c1] = char_errors(ref[j], out.words[j], false);
      const auto [m2, c2] = char_errors(ref[j], out.words[j], true);
      char_mm1 += m1;
      chars1 += c1;
      char_mm2 += m2;
      chars2 += c2;
      if (!e1) continue;
      if (out.origins[j] == WordOrigin::Fallback) {
        ++unanalyzed;
      } else {
        const auto& cands = out.candidates[j];
        const bool present =
            std::find(cands.begin(), cands.end(), ref[j]) != cands.end();
        if (present)
          ++miss;
        else
          ++absent;
      }
    }
  }

  EvalReport report;
  report.words_evaluated = words_eval;
  report.chars_evaluated = chars1;
  report.wrong_words = wrong1;
  if (words_eval > 0) {
    report.wer1 = static_cast<double>(wrong1) / static_cast<double>(words_eval);
    report.wer2 = static_cast<double>(wrong2) / static_cast<double>(words_eval);
  }
  if (chars1 > 0)
    report.der1 = static_cast<double>(char_mm1) / static_cast<double>(chars1);
  if (chars2 > 0)
    report.der2 = static_cast<double>(char_mm2) / static_cast<double>(chars2);
  const double secs = std::chrono::duration<double>(elapsed).count();
  if (secs > 0)
    report.throughput_wps = static_cast<double>(words_decoded) / secs;
  if (wrong1 > 0) {
    const auto pct = [&](std::uint64_t n) {
      return 100.0 * static_cast<double>(n) / static_cast<double>(wrong1);
    };
    report.unanalyzed_pct = pct(unanalyzed);
    report.right_solution_absent_pct = pct(absent);
    report.viterbi_miss_pct = pct(miss);
  }
  return report;
}

// Human-readable table, laid out like the evaluation tables the CLI prints.
inline std::string render_table(const EvalReport& r,
                                const std::string& model_label) {
  std::ostringstream out;
  out << std::fixed;
  out << std::left << std::setw(18) << "Model" << std::right << std::setw(10)
      << "Words/s" << std::setw(10) << "WER1(%)" << std::setw(10) << "WER2(%)"
      << std::setw(10) << "DER1(%)" << std::setw(10) << "DER2(%)" << "\n";
  out << std::left << std::setw(18) << model_label << std::right
      << std::setprecision(2) << std::setw(10) << r.throughput_wps
      << std::setw(10) << 100.0 * r.wer1 << std::setw(10) << 100.0 * r.wer2
      << std::setw(10) << 100.0 * r.der1 << std::setw(10) << 100.0 * r.der2
      << "\n";
  if (r.wrong_words > 0) {
    out << "\nOf " << r.wrong_words << " wrongly vowelized words:\n"
        << std::setprecision(2) << "  unanalyzed:           " << std::setw(6)
        << r.unanalyzed_pct << "%\n"
        << "  right solution absent: " << std::setw(5)
        << r.right_solution_absent_pct << "%\n"
        << "  not chosen by search:  " << std::setw(5) << r.viterbi_miss_pct
        << "%\n";
  }
  return out.str();
}

// Machine-readable key=value lines.
inline std::string render_kv(const EvalReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "wer1=" << r.wer1 << "\n"
      << "wer2=" << r.wer2 << "\n"
      << "der1=" << r.der1 << "\n"
      << "der2=" << r.der2 << "\n"
      << "words_evaluated=" << r.words_evaluated << "\n"
      << "chars_evaluated=" << r.chars_evaluated << "\n"
      << "wrong_words=" << r.wrong_words << "\n"
      << std::setprecision(1) << "throughput_wps=" << r.throughput_wps << "\n"
      << std::setprecision(4) << "unanalyzed_pct=" << r.unanalyzed_pct << "\n"
      << "right_solution_absent_pct=" << r.right_solution_absent_pct << "\n"
      << "viterbi_miss_pct=" << r.viterbi_miss_pct << "\n";
  return out.str();
}

}  // namespace tashkil
