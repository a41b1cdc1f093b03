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

#include <random>
#include <sstream>

#include "doctest_ext.hpp"
#include "generators.hpp"
#include "manfi/errors.hpp"
#include "manfi/lexicon.hpp"
#include "reference.hpp"

using namespace manfi;
using namespace manfi::testing;

TEST_CASE("load_wordlist normalizes, deduplicates and skips comments") {
  std::istringstream in("نارنگی\nنارنگی\n# c\n");
  const Wordlist list = load_wordlist(in);
  CHECK(list.lines_read == 3);
  CHECK(list.entries_kept == 1);
  CHECK(list.entries == std::unordered_set<Token>{U"نارنگی"});
}

TEST_CASE("load_wordlist on an empty stream yields an empty set") {
  std::istringstream in("");
  const Wordlist list = load_wordlist(in);
  CHECK(list.entries.empty());
  CHECK(list.lines_read == 0);
}

TEST_CASE("load_wordlist applies normalization to entries") {
  std::istringstream in("غیر فعال\n");
  const Wordlist list = load_wordlist(in);
  CHECK(list.entries == std::unordered_set<Token>{U"غیر‌فعال"});
}

TEST_CASE("load_wordlist tolerates BOM and CRLF") {
  std::istringstream in("\xEF\xBB\xBFکتاب\r\nخانه\r\n");
  const Wordlist list = load_wordlist(in);
  CHECK(list.entries == std::unordered_set<Token>{U"کتاب", U"خانه"});
}

TEST_CASE("load_wordlist reports the byte offset of malformed UTF-8") {
  std::istringstream in("ok\n\xFF\n");
  try {
    load_wordlist(in);
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.byte_offset() == 3);
  }
}

TEST_CASE("wordlists round-trip through save and load") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto words = random_wordset(rng, 40, 8);
    std::ostringstream out;
    save_wordlist(words, out);
    std::istringstream in(out.str());
    CHECK(load_wordlist(in).entries == words);
  }
}

TEST_CASE("longest_leading_match returns the largest matching n") {
  PolarityLexicon lex;
  lex.insert(U"نامرد");
  CHECK(lex.longest_leading_match(U"نامرد") == 5);    // whole word
  CHECK(lex.longest_leading_match(U"نامردها") == 5);  // brute-force verified
  CHECK(!lex.longest_leading_match(U"کتاب").has_value());
  CHECK(!PolarityLexicon().longest_leading_match(U"نامرد").has_value());

  lex.insert(U"نا");
  CHECK(lex.longest_leading_match(U"نامردها") == 5);  // longest, not first
  CHECK(lex.longest_leading_match(U"ناب") == 2);
}

TEST_CASE("trie agrees with the decrementing scan") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 3000; ++i) {
    const auto words = random_wordset(rng, 30, 10);
    const PolarityLexicon lex(words);
    const std::vector<Token> entries(words.begin(), words.end());

    // Bias half the probes toward entry-derived words so hits are common.
    Token probe = random_token(rng, 12);
    if (!entries.empty() && pick(rng, 2) == 0) {
      probe = entries[pick(rng, entries.size())] + random_token(rng, 4);
    }
    CHECK(lex.longest_leading_match(probe) ==
          ref_longest_leading_match(entries, probe));
  }
}

TEST_CASE("prefix table sorts longest-first then lexicographically") {
  const PrefixTable table = PrefixTable::defaults();
  REQUIRE(table.size() == 7);
  const auto& p = table.prefixes();
  CHECK(p[0] == U"غیر");
  CHECK(p[1] == U"پاد");
  CHECK(p[2] == U"بی");
  CHECK(p[3] == U"ضد");
  CHECK(p[4] == U"لا");
  CHECK(p[5] == U"نا");
  CHECK(p[6] == U"ن");
}

TEST_CASE("leading_prefix_match finds the longest prefix and its base") {
  const PrefixTable table = PrefixTable::defaults();

  auto m = leading_prefix_match(U"غیرقانونی", table);
  REQUIRE(m.has_value());
  CHECK(m->prefix == U"غیر");
  CHECK(m->base == U"قانونی");

  m = leading_prefix_match(U"بی‌ادب", table);
  REQUIRE(m.has_value());
  CHECK(m->prefix == U"بی");
  CHECK(m->base == U"ادب");  // ZWNJ absorbed

  CHECK(!leading_prefix_match(U"کتاب", table).has_value());

  // نا wins over ن when both lead.
  m = leading_prefix_match(U"ناب", table);
  REQUIRE(m.has_value());
  CHECK(m->prefix == U"نا");
  CHECK(m->base == U"ب");

  // A bare prefix (or prefix plus ZWNJ) has no base.
  CHECK(!leading_prefix_match(U"بی", table).has_value());
  CHECK(!leading_prefix_match(U"نا", table).has_value());
}

TEST_CASE("leading_prefix_match agrees with the linear reference") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    const auto prefixes = random_prefixset(rng);
    const PrefixTable table(prefixes);
    const std::vector<Token> linear(prefixes.begin(), prefixes.end());

    Token probe = random_token(rng, 8);
    if (!linear.empty() && pick(rng, 2) == 0) {
      probe = linear[pick(rng, linear.size())];
      if (pick(rng, 3) == 0) probe += kZwnj;
      probe += random_token(rng, 4);
    }
    const auto got = leading_prefix_match(probe, table);
    const auto want = ref_leading_prefix_match(linear, probe);
    CHECK(got.has_value() == want.has_value());
    if (got && want) {
      CHECK(got->prefix == want->prefix);
      CHECK(got->base == want->base);
    }
  }
}

TEST_CASE("prefix removal supports per-run exclusions") {
  PrefixTable table = PrefixTable::defaults();
  CHECK(table.remove(U"ن"));
  CHECK(!table.contains(U"ن"));
  CHECK(table.size() == 6);
  CHECK(!table.remove(U"ن"));
  CHECK(!leading_prefix_match(U"نمک", table).has_value());
}

TEST_CASE("exception list flags entries without a leading prefix") {
  const ExceptionList exc(
      std::unordered_set<Token>{U"نارنگی", U"ضدآب", U"کتاب"});
  const auto irregular = exc.irregular_entries(PrefixTable::defaults());
  REQUIRE(irregular.size() == 1);
  CHECK(irregular[0] == U"کتاب");
}
