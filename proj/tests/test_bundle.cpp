#include <cstdio>

#include "doctest.h"
#include "support.hpp"

using namespace tashkil;
using testsupport::uw;
using testsupport::vws;

namespace {

TrainedBundle fixture_bundle() {
  const std::vector<std::vector<VowelizedWord>> corpus = {
      vws({"huwa", "daxala", "Alobayota"}),
      vws({"hiya", "daxala", "Alobayota"}),
      vws({"Aloyawoma", "daxolN", "kabiyrN"}),
  };
  TrainedBundle b;
  b.model1 = estimate_model1(corpus, 0.1);
  b.model2 = estimate_model2(corpus, 0.1);
  b.char_model = estimate_char_model(corpus, 0.1);
  b.lexicon_hash = 0x1234abcd5678ef00ULL;
  b.stats = {3, 9, 7};
  return b;
}

}  // namespace

TEST_CASE("bundle round-trips losslessly") {
  const TrainedBundle b = fixture_bundle();
  const std::string bytes = serialize_bundle(b);
  const TrainedBundle back = parse_bundle(bytes);
  CHECK(back == b);
  CHECK(serialize_bundle(back) == bytes);  // byte-identical re-save
}

TEST_CASE("bundle file round-trip") {
  const TrainedBundle b = fixture_bundle();
  const std::string path = "bundle_roundtrip.bin";
  save_bundle(b, path);
  CHECK(load_bundle(path) == b);
  std::remove(path.c_str());
}

TEST_CASE("tampered bundles are rejected") {
  std::string bytes = serialize_bundle(fixture_bundle());
  SUBCASE("flipped payload byte") {
    bytes[bytes.size() / 2] ^= 0x01;
    CHECK_THROWS_AS(parse_bundle(bytes), CorruptTable);
  }
  SUBCASE("wrong magic") {
    bytes[0] = 'X';
    CHECK_THROWS_AS(parse_bundle(bytes), FormatVersionMismatch);
  }
  SUBCASE("wrong version") {
    bytes[4] = 9;
    CHECK_THROWS_AS(parse_bundle(bytes), FormatVersionMismatch);
  }
  SUBCASE("truncated") {
    CHECK_THROWS_AS(parse_bundle(std::string_view(bytes).substr(0, 40)),
                    CorruptTable);
  }
}

TEST_CASE("a reloaded bundle decodes identically") {
  const TrainedBundle b = fixture_bundle();
  const TrainedBundle back = parse_bundle(serialize_bundle(b));

  Lexicon lex;
  lex.insert({buckwalter_decode("dxl"),
              4,
              {testsupport::vw("daxala"), testsupport::vw("daxolN")}});
  lex.insert({buckwalter_decode("hw"), 2, {testsupport::vw("huwa")}});
  lex.insert({buckwalter_decode("Albyt"), 2, {testsupport::vw("Alobayota")}});
  const LexiconGenerator gen(lex);

  Sentence s;
  s.words = {uw("hw"), uw("dxl"), uw("Albyt")};
  for (ModelView view : {ModelView::Model1, ModelView::Model2}) {
    const auto before = diacritize_sentence_traced(s, b, gen, view);
    const auto after = diacritize_sentence_traced(s, back, gen, view);
    CHECK(before.words == after.words);
    CHECK(before.score == after.score);  // bit-exact tables
  }
}
