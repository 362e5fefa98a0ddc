#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace tashkil;
using testsupport::bw;
using testsupport::enumerate_best;
using testsupport::enumerate_char_best;
using testsupport::uw;
using testsupport::vw;

namespace {

Lattice manual_lattice(ModelView view,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>&
                           columns) {
  Lattice lattice;
  lattice.view = view;
  for (const auto& [word, cands] : columns) {
    LatticeColumn col;
    col.word = uw(word);
    for (const auto& c : cands) col.candidates.push_back(vw(c));
    col.analyzed = !col.candidates.empty();
    lattice.columns.push_back(std::move(col));
  }
  return lattice;
}

SparseRow prob_row(const Vocab& columns,
                   const std::vector<std::pair<std::string, double>>& probs,
                   double floor_prob) {
  SparseRow row;
  row.floor = floor_prob > 0 ? std::log(floor_prob) : kLogZero;
  for (const auto& [key, p] : probs)
    row.entries.emplace_back(columns.find(key), std::log(p));
  std::sort(row.entries.begin(), row.entries.end());
  return row;
}

}  // namespace

TEST_CASE("single-candidate columns force the path") {
  const Lattice lattice = manual_lattice(
      ModelView::Model1, {{"hw", {"huwa"}}, {"dxl", {"daxala"}}});
  // model trained on something unrelated: every candidate is unknown
  const HmmModel m = estimate_model1({testsupport::vws({"ba", "tu"})}, 0.1);
  const DecodePath path = viterbi_decode(lattice, m);
  REQUIRE(path.states.size() == 2);
  CHECK(path.states[0] == vw("huwa"));
  CHECK(path.states[1] == vw("daxala"));
  CHECK(std::isfinite(path.score));
}

TEST_CASE("viterbi beats the greedy per-column argmax") {
  // initial prefers P, but the P row starves both continuations
  const Lattice lattice = manual_lattice(
      ModelView::Model1, {{"d", {"da", "du"}}, {"b", {"ba", "bu"}}});
  const std::string P = surface_key(vw("da")), Q = surface_key(vw("du"));
  const std::string R = surface_key(vw("ba")), S = surface_key(vw("bu"));

  HmmModel m;
  m.emission_kind = EmissionKind::Table;
  for (const auto& k : {P, Q, R, S}) m.hidden.add(k);
  m.observed.add(word_key(uw("d")));
  m.observed.add(word_key(uw("b")));
  m.initial = prob_row(m.hidden, {{P, 0.6}, {Q, 0.4}}, 0.0);
  m.transitions.resize(4);
  m.transitions[(std::size_t)m.hidden.find(P)] =
      prob_row(m.hidden, {{R, 0.1}, {S, 0.2}}, 0.7);
  m.transitions[(std::size_t)m.hidden.find(Q)] =
      prob_row(m.hidden, {{R, 0.9}, {S, 0.1}}, 0.0);
  m.transitions[(std::size_t)m.hidden.find(R)] = prob_row(m.hidden, {}, 1.0);
  m.transitions[(std::size_t)m.hidden.find(S)] = prob_row(m.hidden, {}, 1.0);
  m.emissions.resize(4);
  m.emissions[(std::size_t)m.hidden.find(P)] =
      prob_row(m.observed, {{word_key(uw("d")), 1.0}}, 0.0);
  m.emissions[(std::size_t)m.hidden.find(Q)] =
      prob_row(m.observed, {{word_key(uw("d")), 1.0}}, 0.0);
  m.emissions[(std::size_t)m.hidden.find(R)] =
      prob_row(m.observed, {{word_key(uw("b")), 1.0}}, 0.0);
  m.emissions[(std::size_t)m.hidden.find(S)] =
      prob_row(m.observed, {{word_key(uw("b")), 1.0}}, 0.0);

  // greedy would take P (0.6) then S; the global optimum is Q -> R (0.36)
  const DecodePath path = viterbi_decode(lattice, m);
  CHECK(path.states[0] == vw("du"));
  CHECK(path.states[1] == vw("ba"));
  CHECK(path.score == doctest::Approx(std::log(0.4 * 0.9)).epsilon(1e-12));

  const auto oracle = enumerate_best(lattice, m);
  CHECK(path.choice == oracle.choice);
  CHECK(path.score == doctest::Approx(oracle.score).epsilon(1e-12));
}

TEST_CASE("viterbi matches exhaustive enumeration on random lattices") {
  std::mt19937 rng(101);
  for (int round = 0; round < 300; ++round) {
    const ModelView view =
        (round % 2 == 0) ? ModelView::Model1 : ModelView::Model2;
    const Lattice lattice = testsupport::random_lattice(rng, view);
    const HmmModel m = testsupport::random_model_for(lattice, rng);
    const DecodePath path = viterbi_decode(lattice, m);
    const auto oracle = enumerate_best(lattice, m);
    REQUIRE(oracle.found);
    CHECK(path.choice == oracle.choice);
    CHECK(path.score == doctest::Approx(oracle.score).epsilon(1e-9));
    // the chosen candidate always comes from its own column
    for (std::size_t t = 0; t < path.choice.size(); ++t) {
      CHECK(path.choice[t] >= 0);
      CHECK(path.choice[t] <
            static_cast<std::int32_t>(lattice.columns[t].candidates.size()));
    }
  }
}

TEST_CASE("ties resolve to the earliest candidate") {
  // both candidates unknown to the model: identical floors everywhere
  const Lattice lattice =
      manual_lattice(ModelView::Model1, {{"d", {"du", "da"}}});
  const HmmModel m = estimate_model1({testsupport::vws({"ba"})}, 0.1);
  const DecodePath path = viterbi_decode(lattice, m);
  CHECK(path.choice[0] == 0);
  CHECK(path.states[0] == vw("du"));
}

TEST_CASE("empty columns are rejected") {
  Lattice lattice = manual_lattice(ModelView::Model1, {{"d", {"da"}}});
  lattice.columns.push_back({uw("b"), {}, false});
  const HmmModel m = estimate_model1({testsupport::vws({"da"})}, 0.1);
  CHECK_THROWS_AS(viterbi_decode(lattice, m), EmptyColumn);
}

TEST_CASE("impossible lattices raise AllPathsImpossible") {
  // the candidate does not strip to the column's word, so the structural
  // emission is -inf for every path
  Lattice lattice = manual_lattice(ModelView::Model1, {{"b", {"da"}}});
  const HmmModel m = estimate_model1({testsupport::vws({"da"})}, 0.1);
  CHECK_THROWS_AS(viterbi_decode(lattice, m), AllPathsImpossible);
}

TEST_CASE("fallback decoding: single letter closed form") {
  std::mt19937 rng(57);
  const std::vector<std::string> letters = {"d", "b", "q"};
  std::vector<std::string> observed;
  for (const auto& l : letters) observed.push_back(word_key(uw(l)));
  std::vector<std::string> hidden;
  for (DiacriticMark m : all_marks()) hidden.emplace_back(mark_token(m));
  const HmmModel cm =
      testsupport::random_model(hidden, observed, rng, EmissionKind::Table);

  const UnvowelizedWord w = uw("d");
  const VowelizedWord out = decode_fallback_word(w, cm);

  DiacriticMark best = DiacriticMark::Fatha;
  double best_score = -std::numeric_limits<double>::infinity();
  for (DiacriticMark m : all_marks()) {
    const double s = cm.initial_logprob(mark_token(m)) +
                     cm.emission_logprob(mark_token(m), word_key(w));
    if (s > best_score) {
      best_score = s;
      best = m;
    }
  }
  CHECK(out.marks[0] == best);
}

TEST_CASE("fallback decoding matches brute force over mark sequences") {
  std::mt19937 rng(58);
  std::vector<std::string> hidden;
  for (DiacriticMark m : all_marks()) hidden.emplace_back(mark_token(m));
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<std::size_t> letter(
      0, testsupport::letter_pool().size() - 1);

  for (int round = 0; round < 50; ++round) {
    UnvowelizedWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      w.letters.push_back(testsupport::letter_pool()[letter(rng)]);

    std::set<std::string> obs_set;
    for (char32_t cp : w.letters) {
      std::string k;
      utf8_append(k, cp);
      obs_set.insert(k);
    }
    const HmmModel cm = testsupport::random_model(
        hidden, {obs_set.begin(), obs_set.end()}, rng, EmissionKind::Table);

    const VowelizedWord out = decode_fallback_word(w, cm);
    CHECK(strip_diacritics(out) == w);

    const auto oracle = enumerate_char_best(w, cm);
    REQUIRE(oracle.found);
    for (std::size_t t = 0; t < out.marks.size(); ++t)
      CHECK(out.marks[t] == all_marks()[(std::size_t)oracle.choice[t]]);
  }
}

TEST_CASE("fallback output always strips to its input") {
  const HmmModel cm = estimate_char_model(
      std::vector<VowelizedWord>{vw("daxala"), vw("kabiyrN"), vw("huwa")}, 0.1);
  for (const std::string w : {"dxl", "qlm", "Albyt", "b"}) {
    const VowelizedWord out = decode_fallback_word(uw(w), cm);
    CHECK(strip_diacritics(out) == uw(w));
    CHECK(out.marks.size() == out.letters.size());
  }
}
