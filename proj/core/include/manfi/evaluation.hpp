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

#ifndef MANFI_EVALUATION_HPP_
#define MANFI_EVALUATION_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "manfi/detector.hpp"
#include "manfi/unicode.hpp"

namespace manfi {

struct GoldItem {
  Token word;
  bool is_negative = false;
};

struct GoldSample {
  std::vector<GoldItem> items;  // distinct words, at least one
};

// TSV `word<TAB>label`, label in {0,1}; `#` comment lines allowed. Words are
// normalized on load; duplicates and bad labels report the offending row.
GoldSample load_gold(std::istream& in);
GoldSample load_gold_file(const std::filesystem::path& path);

// Exact tally fraction. Kept unreduced so 14/20 reads as 14 out of 20.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

inline bool operator==(const Ratio& a, const Ratio& b) {
  // Cross-multiplied: equal as rationals, not as representations.
  return static_cast<unsigned __int128>(a.num) * b.den ==
         static_cast<unsigned __int128>(b.num) * a.den;
}

// Confusion matrix plus derived metrics. Metrics whose denominator is zero
// are reported as nullopt, never silently defaulted: a missing number can't
// corrupt a comparison.
struct EvaluationReport {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;
  std::uint64_t skipped = 0;  // degenerate words, excluded from the matrix

  std::optional<Ratio> precision() const;  // tp / (tp + fp)
  std::optional<Ratio> recall() const;     // tp / (tp + fn)
  // Harmonic mean as the exact rational 2tp / (2tp + fp + fn); undefined
  // when either factor is undefined or both are zero.
  std::optional<Ratio> f1() const;
};

// Runs detect on every gold word and tallies the confusion matrix against
// the labels. Degenerate words are counted as skipped.
EvaluationReport evaluate(const GoldSample& sample,
                          const PolarityLexicon& lexicon,
                          const ExceptionList& exceptions,
                          const PrefixTable& table, const SuffixRules& rules);

// A deterministic pseudo-random k-subset of the pool for a given seed,
// sorted, for human labeling. k must be in [1, |pool|].
std::vector<Token> sample_words(const std::unordered_set<Token>& pool,
                                std::size_t k, std::uint64_t seed);

void print_report_human(const EvaluationReport& report, std::ostream& out);
// `key=value` block: tp, fp, fn, tn, precision, recall, f1, skipped.
// Undefined metrics print as NA.
void print_report_machine(const EvaluationReport& report, std::ostream& out);

}  // namespace manfi

#endif  // MANFI_EVALUATION_HPP_
