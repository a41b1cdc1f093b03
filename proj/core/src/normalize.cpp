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

#include "manfi/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "manfi/errors.hpp"

namespace manfi {

namespace {

// Dominant Persian orthographic variants, folded deterministically:
// Arabic yeh/kaf to their Persian letters, teh marbuta to heh and
// Arabic-Indic digits to the Extended Arabic-Indic (Persian) block.
char32_t unify(char32_t c) {
  switch (c) {
    case U'ي':  // ي
      return U'ی';
    case U'ك':  // ك
      return U'ک';
    case U'ة':  // ة
      return U'ه';
    default:
      break;
  }
  if (c >= U'٠' && c <= U'٩') return U'۰' + (c - U'٠');
  return c;
}

// Harakat (U+064B..U+0652) and tatweel carry no lexical identity here.
bool is_dropped(char32_t c) {
  return (c >= U'ً' && c <= U'ْ') || c == U'ـ';
}

}  // namespace

Token normalize_scalars(std::u32string_view raw) {
  Token out;
  out.reserve(raw.size());
  bool pending_separator = false;
  for (char32_t c : raw) {
    if (is_dropped(c)) continue;
    c = unify(c);
    if (is_space(c) || c == kZwnj) {
      pending_separator = true;
      continue;
    }
    if (pending_separator && !out.empty()) out.push_back(kZwnj);
    pending_separator = false;
    out.push_back(c);
  }
  return out;
}

Token normalize(std::string_view raw_utf8) {
  return normalize_scalars(decode_utf8(raw_utf8));
}

Token stem(const Token& token, const SuffixRules& rules) {
  Token t = token;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (const SuffixRule& rule : rules) {
      const std::size_t n = rule.suffix.size();
      if (t.size() <= n || t.compare(t.size() - n, n, rule.suffix) != 0) {
        continue;
      }
      std::size_t cut = t.size() - n;
      if (rule.strip_preceding_zwnj && cut > 0 && t[cut - 1] == kZwnj) --cut;
      if (cut < 2) continue;  // residue floor
      t.resize(cut);
      stripped = true;
      break;  // rescan from the longest rule
    }
  }
  while (!t.empty() && t.back() == kZwnj) t.pop_back();
  return t;
}

namespace {

void sort_rules(SuffixRules& rules) {
  std::stable_sort(rules.begin(), rules.end(),
                   [](const SuffixRule& a, const SuffixRule& b) {
                     return a.suffix.size() > b.suffix.size();
                   });
}

}  // namespace

SuffixRules load_suffix_rules(std::istream& in) {
  SuffixRules rules;
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
      throw ParseError("expected `suffix<TAB>{0,1}`", line_number);
    }
    const Token suffix = normalize(line.substr(0, tab));
    const std::string flag = line.substr(tab + 1);
    if (suffix.empty()) {
      throw ParseError("empty suffix", line_number);
    }
    if (flag != "0" && flag != "1") {
      throw ParseError("zwnj flag must be 0 or 1, got \"" + flag + "\"",
                       line_number);
    }
    for (const SuffixRule& existing : rules) {
      if (existing.suffix == suffix) {
        throw ParseError("duplicate suffix \"" + encode_utf8(suffix) + "\"",
                         line_number);
      }
    }
    rules.push_back(SuffixRule{suffix, flag == "1"});
  }
  sort_rules(rules);
  return rules;
}

SuffixRules load_suffix_rules_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open suffix-rule file", path.string());
  try {
    return load_suffix_rules(in);
  } catch (const ParseError& e) {
    throw IoError(std::string(e.what()), path.string());
  }
}

SuffixRules default_suffix_rules() {
  static const char32_t* const kSuffixes[] = {
      U"ها", U"های", U"هایی", U"یان", U"ان",           // plurals
      U"تر", U"ترین",                                  // comparative forms
      U"ام", U"ات", U"اش", U"مان", U"تان", U"شان",     // pronominal clitics
      U"ی",                                            // relational ya
  };
  SuffixRules rules;
  rules.reserve(std::size(kSuffixes));
  for (const char32_t* s : kSuffixes) {
    rules.push_back(SuffixRule{Token(s), true});
  }
  sort_rules(rules);
  return rules;
}

}  // namespace manfi
