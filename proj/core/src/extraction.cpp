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

#include "manfi/extraction.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "manfi/errors.hpp"
#include "manfi/normalize.hpp"

namespace manfi {

void UnigramModel::add(const Token& token, std::uint64_t n) {
  if (token.empty() || n == 0) return;
  counts_[token] += n;
  total_ += n;
}

std::uint64_t UnigramModel::count(const Token& token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

UnigramModel build_unigram_model(std::istream& corpus) {
  std::string data(std::istreambuf_iterator<char>(corpus), {});
  std::size_t pos = 0;
  if (data.rfind("\xEF\xBB\xBF", 0) == 0) pos = 3;

  UnigramModel model;
  std::u32string raw_token;
  auto flush = [&]() {
    if (raw_token.empty()) return;
    Token token = normalize_scalars(raw_token);
    raw_token.clear();
    if (!token.empty()) model.add(token);
  };

  while (pos < data.size()) {
    const char32_t c = decode_one(data, pos);
    if (is_space(c)) {
      flush();
    } else {
      raw_token.push_back(c);
    }
  }
  flush();
  return model;
}

UnigramModel build_unigram_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file", path.string());
  try {
    return build_unigram_model(in);
  } catch (const DecodeError& e) {
    throw IoError(std::string(e.what()), path.string());
  }
}

std::unordered_set<Token> harvest_candidates(
    const std::unordered_set<Token>& words, const PrefixTable& table) {
  std::unordered_set<Token> candidates;
  for (const Token& word : words) {
    if (leading_prefix_match(word, table)) candidates.insert(word);
  }
  return candidates;
}

PartitionReport partition_candidates(const std::unordered_set<Token>& candidates,
                                     const UnigramModel& model,
                                     const PrefixTable& table,
                                     std::uint64_t threshold) {
  if (threshold == 0) {
    throw std::invalid_argument("partition threshold must be at least 1");
  }

  std::vector<Token> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end());

  PartitionReport report;
  report.evidence.reserve(ordered.size());
  for (const Token& word : ordered) {
    const auto match = leading_prefix_match(word, table);
    if (!match) {
      throw Error("candidate \"" + encode_utf8(word) +
                  "\" has no leading prefix; harvesting is broken upstream");
    }
    const std::uint64_t base_count = model.count(match->base);
    report.evidence.push_back(
        EvidenceRow{word, match->prefix, match->base, base_count});
    if (base_count > threshold) {
      report.valid_affixed.insert(word);
    } else {
      report.exceptions.insert(word);
    }
  }
  return report;
}

void emit_partition(const PartitionReport& report,
                    const std::filesystem::path& valid_path,
                    const std::filesystem::path& exceptions_path,
                    const std::filesystem::path& evidence_path) {
  save_wordlist_file(report.valid_affixed, valid_path);
  save_wordlist_file(report.exceptions, exceptions_path);

  std::ofstream out(evidence_path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open evidence file for writing",
                  evidence_path.string());
  }
  for (const EvidenceRow& row : report.evidence) {
    out << encode_utf8(row.word) << '\t' << encode_utf8(row.prefix) << '\t'
        << encode_utf8(row.base) << '\t' << row.base_count << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed writing evidence file",
                          evidence_path.string());
}

WordlistDiff diff_wordlists(const std::unordered_set<Token>& first,
                            const std::unordered_set<Token>& second) {
  WordlistDiff diff;
  for (const Token& t : first) {
    if (!second.count(t)) diff.only_in_first.push_back(t);
  }
  for (const Token& t : second) {
    if (!first.count(t)) diff.only_in_second.push_back(t);
  }
  std::sort(diff.only_in_first.begin(), diff.only_in_first.end());
  std::sort(diff.only_in_second.begin(), diff.only_in_second.end());
  return diff;
}

}  // namespace manfi
