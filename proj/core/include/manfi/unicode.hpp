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

#ifndef MANFI_UNICODE_HPP_
#define MANFI_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace manfi {

// A token in canonical form: unified codepoints, no whitespace, internal
// single-ZWNJ separators only. Produced by normalize() and stem(); all
// positions and lengths in this library count Unicode scalar values.
using Token = std::u32string;

// Zero-width non-joiner, the affix/compound separator in Persian script.
inline constexpr char32_t kZwnj = U'‌';

// Unicode White_Space. ZWNJ is content, not whitespace.
bool is_space(char32_t c) noexcept;

// Strict UTF-8 decoding: rejects overlong forms, surrogates and values past
// U+10FFFF. On failure throws DecodeError carrying byte_base plus the offset
// of the offending byte; byte_base lets callers decode a slice of a larger
// buffer and still report stream-absolute offsets.
std::u32string decode_utf8(std::string_view bytes, std::size_t byte_base = 0);

// Decodes the scalar starting at pos and advances pos past it.
char32_t decode_one(std::string_view bytes, std::size_t& pos,
                    std::size_t byte_base = 0);

std::string encode_utf8(std::u32string_view scalars);

}  // namespace manfi

#endif  // MANFI_UNICODE_HPP_
