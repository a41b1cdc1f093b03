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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest_ext.hpp"
#include "generators.hpp"
#include "manfi/errors.hpp"
#include "manfi/evaluation.hpp"

using namespace manfi;
using namespace manfi::testing;

TEST_CASE("gold files parse words and binary labels") {
  std::istringstream in("# sample\nزشت\t1\nکتاب\t0\n");
  const GoldSample sample = load_gold(in);
  REQUIRE(sample.items.size() == 2);
  CHECK(sample.items[0].word == U"زشت");
  CHECK(sample.items[0].is_negative);
  CHECK(sample.items[1].word == U"کتاب");
  CHECK(!sample.items[1].is_negative);
}

TEST_CASE("gold parsing rejects bad rows by number") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_gold(in);
  };
  try {
    parse("زشت\t1\nکتاب\t2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_number() == 2);
  }
  CHECK_THROWS_AS(parse("زشت 1\n"), ParseError);          // no tab
  CHECK_THROWS_AS(parse("زشت\t1\nزشت\t0\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse(""), ParseError);                  // no items
  CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
}

TEST_CASE("single-row gold files evaluate fine") {
  std::istringstream in("کتاب\t0\n");
  const GoldSample sample = load_gold(in);
  const auto report = evaluate(sample, PolarityLexicon(), ExceptionList(),
                               PrefixTable::defaults(), SuffixRules());
  CHECK(report.tn == 1);
  CHECK(report.tp + report.fp + report.fn == 0);
}

TEST_CASE("the confusion matrix and metrics follow the tally") {
  // Stores rigged so exactly the first k lexicon words fire.
  PolarityLexicon lexicon;
  lexicon.insert(U"زشت");
  GoldSample sample;
  sample.items.push_back({U"زشت", true});    // tp
  sample.items.push_back({U"ناودان", false});  // fp (prefix rule)
  sample.items.push_back({U"قاتل", true});   // fn
  sample.items.push_back({U"کتاب", false});  // tn

  const auto report = evaluate(sample, lexicon, ExceptionList(),
                               PrefixTable::defaults(), SuffixRules());
  CHECK(report.tp == 1);
  CHECK(report.fp == 1);
  CHECK(report.fn == 1);
  CHECK(report.tn == 1);
  CHECK(report.precision() == Ratio{1, 2});
  CHECK(report.recall() == Ratio{1, 2});
  CHECK(report.f1() == Ratio{1, 2});
}

TEST_CASE("an all-correct sample scores perfect metrics") {
  PolarityLexicon lexicon;
  lexicon.insert(U"زشت");
  lexicon.insert(U"دروغ");
  GoldSample sample;
  sample.items.push_back({U"زشت", true});
  sample.items.push_back({U"دروغ", true});
  sample.items.push_back({U"کتاب", false});

  const auto report = evaluate(sample, lexicon, ExceptionList(),
                               PrefixTable::defaults(), SuffixRules());
  REQUIRE(report.precision().has_value());
  REQUIRE(report.recall().has_value());
  CHECK(report.precision()->value() == 1.0);
  CHECK(report.recall()->value() == 1.0);
}

TEST_CASE("metrics guard their divisions") {
  GoldSample sample;
  sample.items.push_back({U"قاتل", true});  // nothing will detect it
  const auto report = evaluate(sample, PolarityLexicon(), ExceptionList(),
                               PrefixTable(), SuffixRules());
  CHECK(report.fn == 1);
  CHECK(!report.precision().has_value());  // nothing predicted negative
  REQUIRE(report.recall().has_value());
  CHECK(report.recall()->value() == 0.0);
  CHECK(!report.f1().has_value());

  EvaluationReport all_tn;
  all_tn.tn = 5;
  CHECK(!all_tn.precision().has_value());
  CHECK(!all_tn.recall().has_value());
  CHECK(!all_tn.f1().has_value());
}

TEST_CASE("metric algebra agrees with an independent formula path") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 2000; ++i) {
    EvaluationReport r;
    r.tp = pick(rng, 50);
    r.fp = pick(rng, 50);
    r.fn = pick(rng, 50);
    r.tn = pick(rng, 50);

    if (r.tp + r.fp > 0) {
      const double p = static_cast<double>(r.tp) / (r.tp + r.fp);
      CHECK(std::abs(r.precision()->value() - p) <= 1e-12);
    } else {
      CHECK(!r.precision().has_value());
    }
    if (r.tp + r.fn > 0) {
      const double rec = static_cast<double>(r.tp) / (r.tp + r.fn);
      CHECK(std::abs(r.recall()->value() - rec) <= 1e-12);
    } else {
      CHECK(!r.recall().has_value());
    }
    if (r.tp > 0) {
      const double p = r.precision()->value();
      const double rec = r.recall()->value();
      CHECK(std::abs(r.f1()->value() - 2 * p * rec / (p + rec)) <= 1e-12);
    }
  }
}

TEST_CASE("degenerate gold words are skipped, not scored") {
  GoldSample sample;
  sample.items.push_back({U"کتاب", false});
  sample.items.push_back({Token(), true});  // only constructible in code
  const SuffixRules rules = default_suffix_rules();
  const auto report = evaluate(sample, PolarityLexicon(), ExceptionList(),
                               PrefixTable::defaults(), rules);
  CHECK(report.skipped == 1);
  CHECK(report.tp + report.fp + report.fn + report.tn == 1);
  CHECK(report.tn == 1);
}

TEST_CASE("evaluate is reproducible for fixed stores and sample") {
  PolarityLexicon lexicon;
  lexicon.insert(U"زشت");
  GoldSample sample;
  sample.items.push_back({U"زشت", true});
  sample.items.push_back({U"ناشتا", false});
  sample.items.push_back({U"کتاب", false});
  const auto a = evaluate(sample, lexicon, ExceptionList(),
                          PrefixTable::defaults(), default_suffix_rules());
  const auto b = evaluate(sample, lexicon, ExceptionList(),
                          PrefixTable::defaults(), default_suffix_rules());
  CHECK(a.tp == b.tp);
  CHECK(a.fp == b.fp);
  CHECK(a.fn == b.fn);
  CHECK(a.tn == b.tn);
  CHECK(a.skipped == b.skipped);
}

TEST_CASE("machine report prints the full key=value block") {
  EvaluationReport r;
  r.tp = 14;
  r.fp = 6;
  r.fn = 2;
  r.tn = 78;
  std::ostringstream out;
  print_report_machine(r, out);
  CHECK(out.str() ==
        "tp=14\nfp=6\nfn=2\ntn=78\nprecision=0.7\nrecall=0.875\n"
        "f1=0.777777777778\nskipped=0\n");
}

TEST_CASE("sample_words is a deterministic k-subset") {
  std::unordered_set<Token> pool;
  std::mt19937_64 rng(8);
  while (pool.size() < 100) pool.insert(random_token(rng, 8));

  const auto all = sample_words(pool, 100, 1);
  CHECK(all.size() == 100);
  CHECK(std::unordered_set<Token>(all.begin(), all.end()) == pool);

  const auto a = sample_words(pool, 10, 42);
  const auto b = sample_words(pool, 10, 42);
  CHECK(a == b);
  for (const Token& t : a) CHECK(pool.count(t) == 1);

  const auto c = sample_words(pool, 10, 43);
  CHECK(a != c);  // different seed, different subset (overwhelmingly)

  CHECK_THROWS_AS(sample_words(pool, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_words(pool, 101, 1), std::invalid_argument);
}
