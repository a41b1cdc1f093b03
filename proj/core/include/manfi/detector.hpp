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

#ifndef MANFI_DETECTOR_HPP_
#define MANFI_DETECTOR_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "manfi/lexicon.hpp"
#include "manfi/normalize.hpp"
#include "manfi/unicode.hpp"

namespace manfi {

enum class Rationale {
  kPolarityMatch,  // a lexicon entry leads the token -> negative
  kExceptionHit,   // the whole token is an exception -> not negative
  kPrefixHit,      // a negative prefix leads the token -> negative
  kNoMatch,        // nothing fired -> not negative
};

std::string_view to_string(Rationale r);

struct DetectionVerdict {
  bool negative = false;
  Rationale rationale = Rationale::kNoMatch;
  std::size_t matched_length = 0;  // meaningful for kPolarityMatch
  Token prefix;                    // meaningful for kPrefixHit
  std::string surface;             // the input as given
  Token canonical;                 // after normalize + stem
};

// normalize() then stem(), in exactly that order. A token that comes out
// empty cannot be classified and raises DegenerateInputError.
Token preprocess(std::string_view raw, const SuffixRules& rules);

// The decision procedure, stages strictly in order on the preprocessed
// token t:
//   1. a lexicon entry leads t            -> negative, PolarityMatch(n)
//   2. t is in the exceptions list        -> not negative, ExceptionHit
//   3. a table prefix leads t             -> negative, PrefixHit(prefix)
//   4. otherwise                          -> not negative, NoMatch
// Note the sharp edge of stage order: a polarity-lexicon leading match
// overrides a hand-added exception.
DetectionVerdict detect(std::string_view raw, const PolarityLexicon& lexicon,
                        const ExceptionList& exceptions,
                        const PrefixTable& table, const SuffixRules& rules);

struct BatchRecord {
  std::size_t line_number = 0;  // 1-based physical line
  std::string surface;
  bool skipped = false;  // degenerate line, no verdict
  DetectionVerdict verdict;
};

// One verdict per non-empty line, order preserved. Whitespace-only lines
// yield a skip record instead of aborting; malformed UTF-8 aborts with the
// line number.
std::vector<BatchRecord> detect_batch(std::istream& in,
                                      const PolarityLexicon& lexicon,
                                      const ExceptionList& exceptions,
                                      const PrefixTable& table,
                                      const SuffixRules& rules);

// `surface<TAB>canonical<TAB>negative{0,1}<TAB>rationale<TAB>detail`;
// detail is the matched length for PolarityMatch, the prefix for PrefixHit,
// empty otherwise.
std::string verdict_tsv_row(const DetectionVerdict& verdict);

}  // namespace manfi

#endif  // MANFI_DETECTOR_HPP_
