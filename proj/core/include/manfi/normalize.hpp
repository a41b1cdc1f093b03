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

#ifndef MANFI_NORMALIZE_HPP_
#define MANFI_NORMALIZE_HPP_

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "manfi/unicode.hpp"

namespace manfi {

// Canonicalizes one token (which may be a compound with internal spaces):
//   1. surrounding whitespace is dropped,
//   2. Arabic presentation variants fold to Persian forms and the Arabic
//      harakat / tatweel are removed (see unify() in the implementation),
//   3. every internal run of whitespace becomes a single ZWNJ,
//   4. ZWNJ runs collapse and boundary ZWNJ disappears.
// Idempotent; an input with no content yields an empty token.
Token normalize(std::string_view raw_utf8);
Token normalize_scalars(std::u32string_view raw);

struct SuffixRule {
  Token suffix;               // non-empty, normalized
  bool strip_preceding_zwnj;  // also remove a ZWNJ sitting before the suffix
};
using SuffixRules = std::vector<SuffixRule>;

// Rule file: `suffix<TAB>{0,1}` per line, `#` starts a comment line.
// Returned longest-suffix-first; equal lengths keep file order, duplicate
// suffixes are rejected.
SuffixRules load_suffix_rules(std::istream& in);
SuffixRules load_suffix_rules_file(const std::filesystem::path& path);

// Built-in noun-postfix table: plurals, comparative/superlative, pronominal
// clitics, relational ya. data/suffix_rules.tsv ships the same content.
SuffixRules default_suffix_rules();

// Repeatedly strips the longest matching suffix while at least two scalar
// values would remain, then restores ZWNJ hygiene. Applying stem twice is
// the same as applying it once for the default table. Tokens with no
// matching suffix come back unchanged.
Token stem(const Token& token, const SuffixRules& rules);

}  // namespace manfi

#endif  // MANFI_NORMALIZE_HPP_
