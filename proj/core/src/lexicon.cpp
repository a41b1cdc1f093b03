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

#include "manfi/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "manfi/errors.hpp"
#include "manfi/normalize.hpp"

namespace manfi {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool starts_with(const Token& word, const Token& prefix) {
  return word.size() >= prefix.size() &&
         word.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

Wordlist load_wordlist(std::istream& in) {
  std::string data(std::istreambuf_iterator<char>(in), {});
  std::size_t offset = 0;
  if (data.rfind(kBom, 0) == 0) offset = kBom.size();

  Wordlist list;
  while (offset < data.size()) {
    std::size_t eol = data.find('\n', offset);
    std::size_t end = (eol == std::string::npos) ? data.size() : eol;
    std::size_t line_end = end;
    if (line_end > offset && data[line_end - 1] == '\r') --line_end;
    ++list.lines_read;

    const std::string_view line(data.data() + offset, line_end - offset);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      Token token = normalize_scalars(decode_utf8(line, offset));
      if (!token.empty() && list.entries.insert(std::move(token)).second) {
        ++list.entries_kept;
      }
    }

    if (eol == std::string::npos) break;
    offset = eol + 1;
  }
  return list;
}

Wordlist load_wordlist_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open wordlist file", path.string());
  try {
    return load_wordlist(in);
  } catch (const DecodeError& e) {
    throw IoError(std::string(e.what()), path.string());
  }
}

void save_wordlist(const std::unordered_set<Token>& entries,
                   std::ostream& out) {
  std::vector<Token> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (const Token& t : sorted) out << encode_utf8(t) << '\n';
}

void save_wordlist_file(const std::unordered_set<Token>& entries,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open wordlist file for writing",
                          path.string());
  save_wordlist(entries, out);
  out.flush();
  if (!out) throw IoError("failed writing wordlist file", path.string());
}

PolarityLexicon::PolarityLexicon(const std::unordered_set<Token>& words) {
  for (const Token& w : words) insert(w);
}

void PolarityLexicon::insert(const Token& word) {
  if (word.empty()) return;
  Node* node = &root_;
  for (char32_t c : word) {
    auto& child = node->children[c];
    if (!child) child = std::make_unique<Node>();
    node = child.get();
  }
  if (!node->terminal) {
    node->terminal = true;
    ++size_;
  }
}

bool PolarityLexicon::contains(const Token& word) const {
  if (word.empty()) return false;
  const Node* node = &root_;
  for (char32_t c : word) {
    auto it = node->children.find(c);
    if (it == node->children.end()) return false;
    node = it->second.get();
  }
  return node->terminal;
}

std::optional<std::size_t> PolarityLexicon::longest_leading_match(
    const Token& word) const {
  std::optional<std::size_t> best;
  const Node* node = &root_;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = node->children.find(word[i]);
    if (it == node->children.end()) break;
    node = it->second.get();
    if (node->terminal) best = i + 1;
  }
  return best;
}

PrefixTable::PrefixTable(const std::unordered_set<Token>& prefixes) {
  prefixes_.reserve(prefixes.size());
  for (const Token& p : prefixes) {
    if (!p.empty()) prefixes_.push_back(p);
  }
  std::sort(prefixes_.begin(), prefixes_.end(),
            [](const Token& a, const Token& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
}

PrefixTable PrefixTable::defaults() {
  const std::vector<Token> defaults = default_prefixes();
  return PrefixTable(
      std::unordered_set<Token>(defaults.begin(), defaults.end()));
}

bool PrefixTable::contains(const Token& prefix) const {
  return std::find(prefixes_.begin(), prefixes_.end(), prefix) !=
         prefixes_.end();
}

bool PrefixTable::remove(const Token& prefix) {
  auto it = std::find(prefixes_.begin(), prefixes_.end(), prefix);
  if (it == prefixes_.end()) return false;
  prefixes_.erase(it);
  return true;
}

std::vector<Token> default_prefixes() {
  return {U"پاد", U"نا", U"بی", U"ضد", U"غیر", U"لا", U"ن"};
}

std::optional<PrefixMatch> leading_prefix_match(const Token& word,
                                                const PrefixTable& table) {
  for (const Token& p : table.prefixes()) {
    if (p.size() > word.size() || word.compare(0, p.size(), p) != 0) continue;
    std::size_t base_start = p.size();
    if (base_start < word.size() && word[base_start] == kZwnj) ++base_start;
    if (base_start >= word.size()) return std::nullopt;  // base would be empty
    return PrefixMatch{p, word.substr(base_start)};
  }
  return std::nullopt;
}

ExceptionList::ExceptionList(std::unordered_set<Token> entries)
    : entries_(std::move(entries)) {
  entries_.erase(Token());
}

bool ExceptionList::contains(const Token& word) const {
  return entries_.count(word) != 0;
}

std::vector<Token> ExceptionList::irregular_entries(
    const PrefixTable& table) const {
  std::vector<Token> irregular;
  for (const Token& entry : entries_) {
    bool prefixed = false;
    for (const Token& p : table.prefixes()) {
      if (starts_with(entry, p)) {
        prefixed = true;
        break;
      }
    }
    if (!prefixed) irregular.push_back(entry);
  }
  std::sort(irregular.begin(), irregular.end());
  return irregular;
}

}  // namespace manfi
