// Command-line front end: lexicon building, training, diacritization and
// evaluation over plain-text corpora.

#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tashkil/tashkil.hpp"

namespace {

using namespace tashkil;

struct CommonOpts {
  Encoding encoding = Encoding::Utf8;
  std::string delimiters;  // UTF-8; empty = default set
  int model = 1;
  unsigned seed = 0;  // reserved; nothing is randomized in v1
};

std::u32string delimiter_set(const CommonOpts& opts) {
  return opts.delimiters.empty() ? default_delimiters()
                                 : utf8_decode(opts.delimiters);
}

std::u32string read_input(const std::string& path, Encoding enc) {
  if (path.empty() || path == "-") {
    std::string bytes((std::istreambuf_iterator<char>(std::cin)),
                      std::istreambuf_iterator<char>());
    return decode_bytes(bytes, enc);
  }
  return read_text_file(path, enc);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-")
    std::cout << bytes;
  else
    write_file_bytes(path, bytes);
}

std::vector<std::vector<VowelizedWord>> read_corpus_sentences(
    const std::vector<std::string>& paths, Encoding enc,
    const std::u32string& delims) {
  std::vector<std::vector<VowelizedWord>> sentences;
  for (const auto& path : paths) {
    auto batch = segment_vowelized(read_text_file(path, enc), delims);
    sentences.insert(sentences.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
  }
  return sentences;
}

std::string sentences_to_text(
    const std::vector<std::vector<VowelizedWord>>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) out += ' ';
      out += utf8_encode(vowelized_text(s[j]));
    }
    out += '\n';
  }
  return out;
}

int cmd_build_lexicon(const std::vector<std::string>& corpora,
                      const std::string& out_path,
                      const std::string& unresolved_path,
                      const std::string& log_path,
                      const LexiconBuildOptions& opts,
                      const CommonOpts& common) {
  std::vector<std::u32string> texts;
  texts.reserve(corpora.size());
  for (const auto& path : corpora)
    texts.push_back(read_text_file(path, common.encoding));

  const LexiconBuildResult result = build_lexicon(texts, opts, corpora);
  result.lexicon.save(out_path);

  std::string unresolved;
  for (const auto& key : result.unresolved) {
    unresolved += utf8_encode(key);
    unresolved += '\n';
  }
  write_file_bytes(unresolved_path.empty() ? out_path + ".unresolved"
                                           : unresolved_path,
                   unresolved);

  std::string log;
  for (const auto& cc : result.per_corpus)
    log += cc.id + "\ttokens=" + std::to_string(cc.tokens) +
           "\tdistinct=" + std::to_string(cc.distinct) + "\n";
  log += "entries=" + std::to_string(result.lexicon.size()) + "\n";
  log += "unresolved=" + std::to_string(result.unresolved.size()) + "\n";
  write_file_bytes(log_path.empty() ? out_path + ".log" : log_path, log);

  std::cerr << "lexicon: " << result.lexicon.size() << " entries, "
            << result.unresolved.size() << " unresolved\n";
  return 0;
}

int cmd_train(const std::vector<std::string>& corpora,
              const std::string& out_path, const std::string& lexicon_path,
              const std::string& heldout_path, const TrainOptions& opts,
              const CommonOpts& common) {
  const std::uint64_t lex_hash = fnv1a(read_file_bytes(lexicon_path));
  const auto sentences =
      read_corpus_sentences(corpora, common.encoding, delimiter_set(common));
  if (sentences.empty()) throw EmptyCorpus("no sentences in training corpora");

  const TrainResult result = train_bundle(sentences, opts, lex_hash);
  save_bundle(result.bundle, out_path);
  write_file_bytes(heldout_path.empty() ? out_path + ".heldout.txt"
                                        : heldout_path,
                   sentences_to_text(result.held_out));

  std::cerr << "trained on " << result.bundle.stats.sentences << " sentences ("
            << result.bundle.stats.tokens << " words, "
            << result.bundle.stats.types << " forms); "
            << result.held_out.size() << " sentences held out\n";
  return 0;
}

int cmd_diacritize(const std::string& input_path, const std::string& out_path,
                   const std::string& bundle_path,
                   const std::string& lexicon_path, const CommonOpts& common) {
  const TrainedBundle bundle = load_bundle(bundle_path);
  const Lexicon lexicon = Lexicon::load(lexicon_path);
  if (bundle.lexicon_hash != fnv1a(read_file_bytes(lexicon_path)))
    std::cerr << "warning: lexicon differs from the one used at training\n";
  const LexiconGenerator gen(lexicon);
  const ModelView view =
      common.model == 1 ? ModelView::Model1 : ModelView::Model2;

  const std::u32string input = read_input(input_path, common.encoding);
  const std::u32string output =
      diacritize_text(input, bundle, gen, view, delimiter_set(common));
  write_output(out_path, utf8_encode(output));
  return 0;
}

int cmd_evaluate(const std::string& ref_path, const std::string& out_path,
                 const std::string& bundle_path,
                 const std::string& lexicon_path, bool skip_bare_ref,
                 const CommonOpts& common) {
  const TrainedBundle bundle = load_bundle(bundle_path);
  const Lexicon lexicon = Lexicon::load(lexicon_path);
  const LexiconGenerator gen(lexicon);
  const ModelView view =
      common.model == 1 ? ModelView::Model1 : ModelView::Model2;

  const auto refs = segment_vowelized(read_text_file(ref_path, common.encoding),
                                      delimiter_set(common));
  if (refs.empty()) throw EmptyCorpus("no sentences in " + ref_path);

  EvalOptions opts;
  opts.skip_bare_ref = skip_bare_ref;
  const EvalReport report =
      evaluate_corpus(refs, make_system(bundle, gen, view), opts);

  const std::string label = "model " + std::to_string(common.model);
  std::cout << render_table(report, label) << "\n" << render_kv(report);
  if (!out_path.empty()) write_file_bytes(out_path, render_kv(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic diacritization with lattice-constrained HMM decoding"};
  app.require_subcommand(1);

  CommonOpts common;
  const std::map<std::string, tashkil::Encoding> encodings{
      {"utf8", tashkil::Encoding::Utf8}, {"cp1256", tashkil::Encoding::Cp1256}};

  const auto add_common = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--encoding", common.encoding, "Input encoding")
        ->transform(CLI::CheckedTransformer(encodings, CLI::ignore_case));
    cmd->add_option("--delimiters", common.delimiters,
                    "Sentence delimiter characters (UTF-8)");
    cmd->add_option("--seed", common.seed, "Reserved; v1 has no randomness");
    if (with_model)
      cmd->add_option("--model", common.model, "1 = word states, 2 = pattern states")
          ->check(CLI::Range(1, 2));
  };

  // build-lexicon
  std::vector<std::string> corpora;
  std::string out_path, unresolved_path, log_path;
  tashkil::LexiconBuildOptions lex_opts;
  auto* build = app.add_subcommand("build-lexicon",
                                   "Build the frequent-word lexicon from corpora");
  build->add_option("corpora", corpora, "Corpus text files")
      ->required();
  build->add_option("-o,--output", out_path, "Lexicon TSV path")->required();
  build->add_option("--cutoff", lex_opts.cutoff, "Top-k words kept per corpus")
      ->capture_default_str();
  build->add_option("--min-count", lex_opts.min_count,
                    "Occurrences a vowelized form needs to become a candidate")
      ->capture_default_str();
  build->add_option("--unresolved", unresolved_path,
                    "Side file for words never seen vowelized");
  build->add_option("--log", log_path, "Build log path");
  add_common(build, false);

  // train
  std::string lexicon_path, heldout_path;
  tashkil::TrainOptions train_opts;
  auto* train = app.add_subcommand("train", "Estimate the HMM bundle");
  train->add_option("corpora", corpora, "Vowelized corpus text files")
      ->required();
  train->add_option("-o,--output", out_path, "Bundle path")->required();
  train->add_option("--lexicon", lexicon_path, "Lexicon TSV used downstream")
      ->required();
  train->add_option("--delta", train_opts.delta, "Additive smoothing constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--split", train_opts.split,
                    "Share of sentences used for estimation")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  train->add_option("--heldout", heldout_path, "Held-out sentences path");
  add_common(train, false);

  // diacritize
  std::string input_path, bundle_path;
  auto* dia = app.add_subcommand("diacritize", "Restore diacritics to text");
  dia->add_option("input", input_path, "Input file ('-' or absent: stdin)");
  dia->add_option("-o,--output", out_path, "Output file (absent: stdout)");
  dia->add_option("--bundle", bundle_path, "Trained model bundle")
      ->required();
  dia->add_option("--lexicon", lexicon_path, "Lexicon TSV")
      ->required();
  add_common(dia, true);

  // evaluate
  std::string ref_path;
  bool skip_bare_ref = false;
  auto* ev = app.add_subcommand("evaluate", "Score against a vowelized reference");
  ev->add_option("reference", ref_path, "Vowelized reference corpus")
      ->required();
  ev->add_option("-o,--output", out_path, "Machine-readable report path");
  ev->add_option("--bundle", bundle_path, "Trained model bundle")
      ->required();
  ev->add_option("--lexicon", lexicon_path, "Lexicon TSV")
      ->required();
  ev->add_flag("--skip-bare-ref", skip_bare_ref,
               "Exclude reference words that carry no mark");
  add_common(ev, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(build))
      return cmd_build_lexicon(corpora, out_path, unresolved_path, log_path,
                               lex_opts, common);
    if (app.got_subcommand(train))
      return cmd_train(corpora, out_path, lexicon_path, heldout_path,
                       train_opts, common);
    if (app.got_subcommand(dia))
      return cmd_diacritize(input_path, out_path, bundle_path, lexicon_path,
                            common);
    if (app.got_subcommand(ev))
      return cmd_evaluate(ref_path, out_path, bundle_path, lexicon_path,
                          skip_bare_ref, common);
  } catch (const tashkil::FormatVersionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tashkil::CorruptTable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tashkil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
