// Copyright 2026 The Manfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "manfi/detector.hpp"
#include "manfi/errors.hpp"
#include "manfi/evaluation.hpp"
#include "manfi/extraction.hpp"
#include "manfi/lexicon.hpp"
#include "manfi/normalize.hpp"

namespace fs = std::filesystem;
using namespace manfi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmptyResult = 2;

struct GlobalOptions {
  std::string data_dir = "data";
  std::string prefixes_path;
  std::string lexicon_path;
  std::string exceptions_path;
  std::string suffix_rules_path;
  std::vector<std::string> exclude_prefixes;
  std::uint64_t threshold = 5;

  fs::path resolve(const std::string& explicit_path,
                   const char* default_name) const {
    if (!explicit_path.empty()) return explicit_path;
    return fs::path(data_dir) / default_name;
  }
  fs::path prefixes() const { return resolve(prefixes_path, "prefixes.txt"); }
  fs::path lexicon() const { return resolve(lexicon_path, "lexicon.txt"); }
  fs::path exceptions() const {
    return resolve(exceptions_path, "exceptions.txt");
  }
  fs::path suffix_rules() const {
    return resolve(suffix_rules_path, "suffix_rules.tsv");
  }
};

PrefixTable load_prefix_table(const GlobalOptions& opts) {
  const Wordlist list = load_wordlist_file(opts.prefixes());
  if (list.entries.empty()) {
    throw IoError("prefix file has no entries", opts.prefixes().string());
  }
  PrefixTable table(list.entries);
  for (const std::string& raw : opts.exclude_prefixes) {
    const Token p = normalize(raw);
    if (!table.remove(p)) {
      std::cerr << "manfi: warning: --exclude-prefix " << raw
                << " is not in the table\n";
    }
  }
  return table;
}

struct StoreSet {
  PolarityLexicon lexicon;
  ExceptionList exceptions;
  PrefixTable table;
  SuffixRules rules;
};

// Loads everything up front so no command produces partial output on a
// config problem.
StoreSet load_stores(const GlobalOptions& opts) {
  StoreSet stores;
  stores.table = load_prefix_table(opts);
  stores.lexicon = PolarityLexicon(load_wordlist_file(opts.lexicon()).entries);
  stores.exceptions =
      ExceptionList(load_wordlist_file(opts.exceptions()).entries);
  stores.rules = load_suffix_rules_file(opts.suffix_rules());

  const auto irregular = stores.exceptions.irregular_entries(stores.table);
  if (!irregular.empty()) {
    std::cerr << "manfi: warning: " << irregular.size()
              << " exception entries start with no active prefix\n";
  }
  return stores;
}

void print_verdict(const DetectionVerdict& verdict) {
  std::cout << verdict_tsv_row(verdict) << '\n';
}

int cmd_detect(const GlobalOptions& opts,
               const std::vector<std::string>& words) {
  const StoreSet s = load_stores(opts);
  if (!words.empty()) {
    for (const std::string& word : words) {
      try {
        print_verdict(
            detect(word, s.lexicon, s.exceptions, s.table, s.rules));
      } catch (const DegenerateInputError& e) {
        std::cerr << "manfi: skipping: " << e.what() << '\n';
      }
    }
    return kExitOk;
  }
  for (const BatchRecord& record :
       detect_batch(std::cin, s.lexicon, s.exceptions, s.table, s.rules)) {
    if (record.skipped) {
      std::cerr << "manfi: skipping degenerate input at line "
                << record.line_number << '\n';
    } else {
      print_verdict(record.verdict);
    }
  }
  return kExitOk;
}

int cmd_evaluate(const GlobalOptions& opts, const std::string& gold_path) {
  const StoreSet s = load_stores(opts);
  const GoldSample sample = load_gold_file(gold_path);
  const EvaluationReport report =
      evaluate(sample, s.lexicon, s.exceptions, s.table, s.rules);
  print_report_human(report, std::cout);
  std::cout << '\n';
  print_report_machine(report, std::cout);
  return kExitOk;
}

int cmd_build_exceptions(const GlobalOptions& opts, const std::string& corpus,
                         const std::string& words, const std::string& out_dir) {
  const PrefixTable table = load_prefix_table(opts);
  const Wordlist word_db = load_wordlist_file(words);
  const UnigramModel model = build_unigram_model_file(corpus);

  const auto candidates = harvest_candidates(word_db.entries, table);
  const PartitionReport report =
      partition_candidates(candidates, model, table, opts.threshold);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  save_wordlist_file(candidates, dir / "candidates.txt");
  emit_partition(report, dir / "valid_affixed.txt", dir / "exceptions.txt",
                 dir / "evidence.tsv");

  const std::string source = fs::path(words).stem().string();
  std::cout << "corpus tokens: " << model.total()
            << " (distinct: " << model.distinct() << ")\n";
  std::cout << "words read: " << word_db.entries.size() << "\n\n";
  std::cout << "Source\tWord Count\n";
  std::cout << source << " Candidates\t" << candidates.size() << '\n';
  std::cout << source << " ValidAffixed\t" << report.valid_affixed.size()
            << '\n';
  std::cout << source << " Exceptions\t" << report.exceptions.size() << '\n';

  if (candidates.empty()) {
    std::cerr << "manfi: warning: no word in " << words
              << " starts with an active prefix\n";
    return kExitEmptyResult;
  }
  return kExitOk;
}

int cmd_normalize(const GlobalOptions& opts,
                  const std::vector<std::string>& words, bool apply_stem) {
  SuffixRules rules;
  if (apply_stem) rules = load_suffix_rules_file(opts.suffix_rules());

  auto emit = [&](const std::string& raw) {
    Token token = normalize(raw);
    if (apply_stem) token = stem(token, rules);
    std::cout << encode_utf8(token) << '\n';
  };

  if (!words.empty()) {
    for (const std::string& word : words) emit(word);
    return kExitOk;
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(std::cin, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      emit(line);
    } catch (const DecodeError& e) {
      throw ParseError(e.what(), line_number);
    }
  }
  return kExitOk;
}

int cmd_sample(const std::string& pool_path, std::size_t k,
               std::uint64_t seed) {
  const Wordlist pool = load_wordlist_file(pool_path);
  for (const Token& word : sample_words(pool.entries, k, seed)) {
    std::cout << encode_utf8(word) << "\t\n";  // label left blank for hand tagging
  }
  return kExitOk;
}

int cmd_diff(const std::string& first, const std::string& second) {
  const Wordlist a = load_wordlist_file(first);
  const Wordlist b = load_wordlist_file(second);
  const WordlistDiff diff = diff_wordlists(a.entries, b.entries);
  for (const Token& t : diff.only_in_first) {
    std::cout << "- " << encode_utf8(t) << '\n';
  }
  for (const Token& t : diff.only_in_second) {
    std::cout << "+ " << encode_utf8(t) << '\n';
  }
  std::cerr << "manfi: " << diff.only_in_first.size() << " removed, "
            << diff.only_in_second.size() << " added\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"manfi: rule-based detection of Persian negative-polarity words"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--data-dir", opts.data_dir,
                 "Directory holding the default store files")
      ->capture_default_str();
  app.add_option("--prefixes", opts.prefixes_path, "Prefix table file");
  app.add_option("--lexicon", opts.lexicon_path, "Negative-polarity lexicon");
  app.add_option("--exceptions", opts.exceptions_path, "Exceptions list");
  app.add_option("--suffix-rules", opts.suffix_rules_path, "Suffix rule file");
  app.add_option("--threshold", opts.threshold,
                 "Base-frequency threshold for build-exceptions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--exclude-prefix", opts.exclude_prefixes,
                 "Drop a prefix for this run without editing the table file");

  auto* build = app.add_subcommand(
      "build-exceptions",
      "Partition prefix-led words into valid-affixed and exceptions");
  std::string corpus_path, words_path, out_dir;
  build->add_option("--corpus", corpus_path, "Raw corpus, whitespace-tokenized")
      ->required();
  build->add_option("--words", words_path, "Word database, one token per line")
      ->required();
  build->add_option("--out-dir", out_dir, "Output directory")->required();

  auto* detect_cmd =
      app.add_subcommand("detect", "Classify tokens (arguments or stdin)");
  std::vector<std::string> detect_words;
  detect_cmd->add_option("words", detect_words,
                         "Tokens to classify; stdin when omitted");

  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score the detector against a gold file");
  std::string gold_path;
  evaluate_cmd->add_option("--gold", gold_path, "TSV word<TAB>{0,1}")
      ->required();

  auto* normalize_cmd = app.add_subcommand(
      "normalize", "Print canonical token forms (arguments or stdin)");
  std::vector<std::string> normalize_words;
  bool apply_stem = false;
  normalize_cmd->add_option("words", normalize_words,
                            "Tokens to normalize; stdin when omitted");
  normalize_cmd->add_flag("--stem", apply_stem,
                          "Also strip noun postfixes after normalizing");

  auto* sample_cmd = app.add_subcommand(
      "sample", "Draw a deterministic word sample for hand labeling");
  std::string pool_path;
  std::size_t sample_k = 0;
  std::uint64_t sample_seed = 0;
  sample_cmd->add_option("--pool", pool_path, "Wordlist to draw from")
      ->required();
  sample_cmd->add_option("-k,--count", sample_k, "Sample size")
      ->required()
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample_seed, "PRNG seed")
      ->capture_default_str();

  auto* diff_cmd = app.add_subcommand(
      "diff", "Compare a generated wordlist with its hand-edited version");
  std::string diff_first, diff_second;
  diff_cmd->add_option("first", diff_first, "Generated list")->required();
  diff_cmd->add_option("second", diff_second, "Edited list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (build->parsed()) {
      return cmd_build_exceptions(opts, corpus_path, words_path, out_dir);
    }
    if (detect_cmd->parsed()) return cmd_detect(opts, detect_words);
    if (evaluate_cmd->parsed()) return cmd_evaluate(opts, gold_path);
    if (normalize_cmd->parsed()) {
      return cmd_normalize(opts, normalize_words, apply_stem);
    }
    if (sample_cmd->parsed()) {
      return cmd_sample(pool_path, sample_k, sample_seed);
    }
    if (diff_cmd->parsed()) return cmd_diff(diff_first, diff_second);
  } catch (const Error& e) {
    std::cerr << "manfi: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "manfi: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;  // unreachable with require_subcommand(1)
}
