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

#ifndef MANFI_LEXICON_HPP_
#define MANFI_LEXICON_HPP_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "manfi/unicode.hpp"

namespace manfi {

struct Wordlist {
  std::unordered_set<Token> entries;
  std::size_t lines_read = 0;    // physical lines, comments and blanks included
  std::size_t entries_kept = 0;  // distinct entries after normalization
};

// One token per line, UTF-8, LF or CRLF, `#` comment lines, BOM tolerated.
// Entries are normalized on load; duplicates collapse silently. These files
// stay plain text on purpose: the workflow expects humans to edit them.
Wordlist load_wordlist(std::istream& in);
Wordlist load_wordlist_file(const std::filesystem::path& path);

// Lexicographic by scalar value, LF line endings. Round-trips with load.
void save_wordlist(const std::unordered_set<Token>& entries, std::ostream& out);
void save_wordlist_file(const std::unordered_set<Token>& entries,
                        const std::filesystem::path& path);

// The known-negative words. longest_leading_match() answers the decrementing
// scan over n = |word| .. 1 ("is word[0, n) an entry?") from a character
// trie; the scan itself is the behavioral definition and the two must agree
// on every input.
class PolarityLexicon {
 public:
  PolarityLexicon() = default;
  explicit PolarityLexicon(const std::unordered_set<Token>& words);

  void insert(const Token& word);  // empty words are ignored
  bool contains(const Token& word) const;
  std::size_t size() const noexcept { return size_; }

  // Largest n in [1, |word|] with word[0, n) an entry; nullopt if none.
  std::optional<std::size_t> longest_leading_match(const Token& word) const;

 private:
  struct Node {
    std::unordered_map<char32_t, std::unique_ptr<Node>> children;
    bool terminal = false;
  };
  Node root_;
  std::size_t size_ = 0;
};

// Negative/contrastive prefixes in canonical order: longest first, then
// lexicographic, so the first leading match found is the longest one.
class PrefixTable {
 public:
  PrefixTable() = default;
  explicit PrefixTable(const std::unordered_set<Token>& prefixes);
  static PrefixTable defaults();

  const std::vector<Token>& prefixes() const noexcept { return prefixes_; }
  bool contains(const Token& prefix) const;
  bool remove(const Token& prefix);
  std::size_t size() const noexcept { return prefixes_.size(); }
  bool empty() const noexcept { return prefixes_.empty(); }

 private:
  std::vector<Token> prefixes_;
};

// Built-in prefix inventory; data/prefixes.txt ships the same content.
std::vector<Token> default_prefixes();

struct PrefixMatch {
  Token prefix;
  Token base;  // word minus prefix minus one optional ZWNJ; never empty
};

// The longest table prefix leading the word, with its base. Absent when no
// prefix leads the word or when stripping the longest one (plus a single
// following ZWNJ) would leave nothing.
std::optional<PrefixMatch> leading_prefix_match(const Token& word,
                                                const PrefixTable& table);

// Words exempt from the prefix rule: pseudo-prefixed words plus validly
// prefixed words whose meaning is nonetheless positive. Lookup is exact
// whole-token membership.
class ExceptionList {
 public:
  ExceptionList() = default;
  explicit ExceptionList(std::unordered_set<Token> entries);

  bool contains(const Token& word) const;
  std::size_t size() const { return entries_.size(); }
  const std::unordered_set<Token>& entries() const { return entries_; }

  // Entries not starting with any table prefix, sorted. Hand-edited lists
  // may legitimately contain such entries; callers warn, never reject.
  std::vector<Token> irregular_entries(const PrefixTable& table) const;

 private:
  std::unordered_set<Token> entries_;
};

}  // namespace manfi

#endif  // MANFI_LEXICON_HPP_
