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

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <vector>

#include "manfi/detector.hpp"
#include "manfi/extraction.hpp"
#include "manfi/lexicon.hpp"
#include "manfi/normalize.hpp"

using namespace manfi;

namespace {

Token synth_token(std::mt19937_64& rng, std::size_t max_len) {
  static const std::u32string pool = U"ابپتجدرزسشضغفقکگلمنی";
  const std::size_t len = 2 + rng() % max_len;
  Token t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(pool[rng() % pool.size()]);
  return t;
}

// Store sizes in the ballpark of the real resources: ~1k negative words,
// ~4k exceptions.
struct BenchStores {
  PolarityLexicon lexicon;
  ExceptionList exceptions;
  PrefixTable table = PrefixTable::defaults();
  SuffixRules rules = default_suffix_rules();
  std::vector<std::string> probes;

  BenchStores() {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) lexicon.insert(synth_token(rng, 8));
    std::unordered_set<Token> exc;
    while (exc.size() < 4000) {
      const auto& ps = table.prefixes();
      exc.insert(ps[rng() % ps.size()] + synth_token(rng, 6));
    }
    exceptions = ExceptionList(std::move(exc));
    for (int i = 0; i < 256; ++i) {
      Token t = synth_token(rng, 10);
      if (i % 3 == 0) {
        const auto& ps = table.prefixes();
        t = ps[rng() % ps.size()] + t;
      }
      probes.push_back(encode_utf8(t));
    }
  }
};

const BenchStores& stores() {
  static const BenchStores s;
  return s;
}

void BM_Normalize(benchmark::State& state) {
  const std::string raw = "  غیر فعال‌‌تر  ";
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(raw));
  }
}
BENCHMARK(BM_Normalize);

void BM_Stem(benchmark::State& state) {
  const Token token = normalize("کتاب‌هایشان");
  const SuffixRules rules = default_suffix_rules();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stem(token, rules));
  }
}
BENCHMARK(BM_Stem);

void BM_LongestLeadingMatch(benchmark::State& state) {
  const BenchStores& s = stores();
  std::size_t i = 0;
  for (auto _ : state) {
    const Token t = normalize(s.probes[i++ % s.probes.size()]);
    benchmark::DoNotOptimize(s.lexicon.longest_leading_match(t));
  }
}
BENCHMARK(BM_LongestLeadingMatch);

void BM_Detect(benchmark::State& state) {
  const BenchStores& s = stores();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect(s.probes[i++ % s.probes.size()], s.lexicon,
                                    s.exceptions, s.table, s.rules));
  }
}
BENCHMARK(BM_Detect);

void BM_BuildUnigramModel(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::ostringstream corpus;
  for (int i = 0; i < 20000; ++i) {
    corpus << encode_utf8(synth_token(rng, 6)) << ' ';
  }
  const std::string text = corpus.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(build_unigram_model(in));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_BuildUnigramModel);

}  // namespace

BENCHMARK_MAIN();
