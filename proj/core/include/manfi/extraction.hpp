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

#ifndef MANFI_EXTRACTION_HPP_
#define MANFI_EXTRACTION_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "manfi/lexicon.hpp"
#include "manfi/unicode.hpp"

namespace manfi {

// Token frequency table over a corpus. Only positive counts are stored and
// the counts always sum to total().
class UnigramModel {
 public:
  void add(const Token& token, std::uint64_t n = 1);
  std::uint64_t count(const Token& token) const;  // 0 when absent
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  const std::unordered_map<Token, std::uint64_t>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<Token, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Counts every whitespace-delimited token of the corpus after
// normalization. Tokens that normalize to nothing (stray tatweel runs and
// the like) are discarded and do not count toward the total. Malformed
// UTF-8 raises DecodeError with the absolute byte offset.
UnigramModel build_unigram_model(std::istream& corpus);
UnigramModel build_unigram_model_file(const std::filesystem::path& path);

// The words led by some table prefix; everything partition_candidates can
// judge, nothing else.
std::unordered_set<Token> harvest_candidates(
    const std::unordered_set<Token>& words, const PrefixTable& table);

struct EvidenceRow {
  Token word;
  Token prefix;
  Token base;
  std::uint64_t base_count;
};

struct PartitionReport {
  std::unordered_set<Token> valid_affixed;
  std::unordered_set<Token> exceptions;
  std::vector<EvidenceRow> evidence;  // sorted by word, one row per candidate
};

// Strips the longest matching prefix off every candidate and sides the word
// by the frequency of its base: base_count > threshold means the base lives
// on its own, so the word goes to valid_affixed; anything else (threshold
// included) goes to exceptions for human review. A candidate with no prefix
// match is an upstream bug and raises Error.
PartitionReport partition_candidates(const std::unordered_set<Token>& candidates,
                                     const UnigramModel& model,
                                     const PrefixTable& table,
                                     std::uint64_t threshold = 5);

// Wordlists sorted for stable diffs; evidence as TSV
// `word<TAB>prefix<TAB>base<TAB>count`. Re-running on identical inputs
// produces byte-identical files.
void emit_partition(const PartitionReport& report,
                    const std::filesystem::path& valid_path,
                    const std::filesystem::path& exceptions_path,
                    const std::filesystem::path& evidence_path);

// Set difference between a generated list and its hand-edited descendant.
// The toolkit reports, humans decide; nothing is ever auto-corrected.
struct WordlistDiff {
  std::vector<Token> only_in_first;   // sorted
  std::vector<Token> only_in_second;  // sorted
};
WordlistDiff diff_wordlists(const std::unordered_set<Token>& first,
                            const std::unordered_set<Token>& second);

}  // namespace manfi

#endif  // MANFI_EXTRACTION_HPP_
