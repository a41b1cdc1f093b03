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

#include "manfi/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "manfi/errors.hpp"
#include "manfi/normalize.hpp"

namespace manfi {

GoldSample load_gold(std::istream& in) {
  GoldSample sample;
  std::unordered_set<Token> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      line.erase(0, 3);
    }
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected `word<TAB>label`", line_number);
    }
    const std::string label = line.substr(tab + 1);
    if (label != "0" && label != "1") {
      throw ParseError("label must be 0 or 1, got \"" + label + "\"",
                       line_number);
    }
    Token word = normalize(line.substr(0, tab));
    if (word.empty()) {
      throw ParseError("word normalizes to nothing", line_number);
    }
    if (!seen.insert(word).second) {
      throw ParseError("duplicate word \"" + encode_utf8(word) + "\"",
                       line_number);
    }
    sample.items.push_back(GoldItem{std::move(word), label == "1"});
  }
  if (sample.items.empty()) {
    throw ParseError("gold file contains no items", line_number);
  }
  return sample;
}

GoldSample load_gold_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold file", path.string());
  try {
    return load_gold(in);
  } catch (const DecodeError& e) {
    throw IoError(std::string(e.what()), path.string());
  }
}

std::optional<Ratio> EvaluationReport::precision() const {
  if (tp + fp == 0) return std::nullopt;
  return Ratio{tp, tp + fp};
}

std::optional<Ratio> EvaluationReport::recall() const {
  if (tp + fn == 0) return std::nullopt;
  return Ratio{tp, tp + fn};
}

std::optional<Ratio> EvaluationReport::f1() const {
  if (!precision() || !recall() || tp == 0) return std::nullopt;
  return Ratio{2 * tp, 2 * tp + fp + fn};
}

EvaluationReport evaluate(const GoldSample& sample,
                          const PolarityLexicon& lexicon,
                          const ExceptionList& exceptions,
                          const PrefixTable& table, const SuffixRules& rules) {
  EvaluationReport report;
  for (const GoldItem& item : sample.items) {
    bool predicted_negative;
    try {
      predicted_negative =
          detect(encode_utf8(item.word), lexicon, exceptions, table, rules)
              .negative;
    } catch (const DegenerateInputError&) {
      ++report.skipped;
      continue;
    }
    if (predicted_negative) {
      (item.is_negative ? report.tp : report.fp) += 1;
    } else {
      (item.is_negative ? report.fn : report.tn) += 1;
    }
  }
  return report;
}

std::vector<Token> sample_words(const std::unordered_set<Token>& pool,
                                std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("sample size must be positive");
  if (k > pool.size()) {
    throw std::invalid_argument("sample size " + std::to_string(k) +
                                " exceeds pool size " +
                                std::to_string(pool.size()));
  }

  std::vector<Token> words(pool.begin(), pool.end());
  std::sort(words.begin(), words.end());

  // Partial Fisher-Yates over the sorted pool. The index is drawn with a
  // plain modulo so the sequence is identical on every platform; the bias
  // is irrelevant at the pool sizes this tool sees.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (words.size() - i));
    std::swap(words[i], words[j]);
  }
  words.resize(k);
  std::sort(words.begin(), words.end());
  return words;
}

namespace {

void print_metric(std::ostream& out, const std::optional<Ratio>& metric) {
  if (metric) {
    out << std::setprecision(12) << metric->value();
  } else {
    out << "NA";
  }
}

}  // namespace

void print_report_human(const EvaluationReport& report, std::ostream& out) {
  const std::uint64_t total = report.tp + report.fp + report.tn + report.fn;
  out << "evaluated " << total << " words";
  if (report.skipped > 0) out << " (" << report.skipped << " skipped)";
  out << "\n";
  out << "  true positives:  " << report.tp << "\n";
  out << "  false positives: " << report.fp << "\n";
  out << "  false negatives: " << report.fn << "\n";
  out << "  true negatives:  " << report.tn << "\n";

  out << "  precision: ";
  if (const auto p = report.precision()) {
    out << p->num << "/" << p->den << " = " << std::setprecision(12)
        << p->value() << "\n";
  } else {
    out << "undefined (nothing predicted negative)\n";
  }
  out << "  recall:    ";
  if (const auto r = report.recall()) {
    out << r->num << "/" << r->den << " = " << std::setprecision(12)
        << r->value() << "\n";
  } else {
    out << "undefined (no negative words in the sample)\n";
  }
  out << "  f1:        ";
  print_metric(out, report.f1());
  out << "\n";
}

void print_report_machine(const EvaluationReport& report, std::ostream& out) {
  out << "tp=" << report.tp << "\n";
  out << "fp=" << report.fp << "\n";
  out << "fn=" << report.fn << "\n";
  out << "tn=" << report.tn << "\n";
  out << "precision=";
  print_metric(out, report.precision());
  out << "\n";
  out << "recall=";
  print_metric(out, report.recall());
  out << "\n";
  out << "f1=";
  print_metric(out, report.f1());
  out << "\n";
  out << "skipped=" << report.skipped << "\n";
}

}  // namespace manfi
