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

#include "manfi/detector.hpp"

#include <istream>
#include <sstream>

#include "manfi/errors.hpp"

namespace manfi {

std::string_view to_string(Rationale r) {
  switch (r) {
    case Rationale::kPolarityMatch:
      return "PolarityMatch";
    case Rationale::kExceptionHit:
      return "ExceptionHit";
    case Rationale::kPrefixHit:
      return "PrefixHit";
    case Rationale::kNoMatch:
      return "NoMatch";
  }
  return "NoMatch";
}

Token preprocess(std::string_view raw, const SuffixRules& rules) {
  Token token = stem(normalize(raw), rules);
  if (token.empty()) throw DegenerateInputError(std::string(raw));
  return token;
}

DetectionVerdict detect(std::string_view raw, const PolarityLexicon& lexicon,
                        const ExceptionList& exceptions,
                        const PrefixTable& table, const SuffixRules& rules) {
  DetectionVerdict verdict;
  verdict.surface.assign(raw);
  verdict.canonical = preprocess(raw, rules);

  if (const auto n = lexicon.longest_leading_match(verdict.canonical)) {
    verdict.negative = true;
    verdict.rationale = Rationale::kPolarityMatch;
    verdict.matched_length = *n;
    return verdict;
  }
  if (exceptions.contains(verdict.canonical)) {
    verdict.negative = false;
    verdict.rationale = Rationale::kExceptionHit;
    return verdict;
  }
  if (const auto match = leading_prefix_match(verdict.canonical, table)) {
    verdict.negative = true;
    verdict.rationale = Rationale::kPrefixHit;
    verdict.prefix = match->prefix;
    return verdict;
  }
  verdict.negative = false;
  verdict.rationale = Rationale::kNoMatch;
  return verdict;
}

std::vector<BatchRecord> detect_batch(std::istream& in,
                                      const PolarityLexicon& lexicon,
                                      const ExceptionList& exceptions,
                                      const PrefixTable& table,
                                      const SuffixRules& rules) {
  std::vector<BatchRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      line.erase(0, 3);
    }
    if (line.empty()) continue;

    BatchRecord record;
    record.line_number = line_number;
    record.surface = line;
    try {
      record.verdict = detect(line, lexicon, exceptions, table, rules);
    } catch (const DegenerateInputError&) {
      record.skipped = true;
    } catch (const DecodeError& e) {
      throw ParseError(e.what(), line_number);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string verdict_tsv_row(const DetectionVerdict& verdict) {
  std::ostringstream row;
  row << verdict.surface << '\t' << encode_utf8(verdict.canonical) << '\t'
      << (verdict.negative ? '1' : '0') << '\t'
      << to_string(verdict.rationale) << '\t';
  if (verdict.rationale == Rationale::kPolarityMatch) {
    row << verdict.matched_length;
  } else if (verdict.rationale == Rationale::kPrefixHit) {
    row << encode_utf8(verdict.prefix);
  }
  return row.str();
}

}  // namespace manfi
