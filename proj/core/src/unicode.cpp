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

#include "manfi/unicode.hpp"

#include "manfi/errors.hpp"

namespace manfi {

bool is_space(char32_t c) noexcept {
  switch (c) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case U'':  // NEL
    case U' ':  // NBSP
    case U' ':
    case U' ':
    case U' ':
    case U' ':
    case U' ':
    case U'　':
      return true;
    default:
      return c >= U' ' && c <= U' ';
  }
}

char32_t decode_one(std::string_view bytes, std::size_t& pos,
                    std::size_t byte_base) {
  const std::size_t start = pos;
  const auto b0 = static_cast<unsigned char>(bytes[start]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }

  std::size_t len;
  char32_t value;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
  } else {
    throw DecodeError(byte_base + start);
  }

  if (start + len > bytes.size()) throw DecodeError(byte_base + start);
  for (std::size_t i = 1; i < len; ++i) {
    const auto bi = static_cast<unsigned char>(bytes[start + i]);
    if ((bi & 0xC0) != 0x80) throw DecodeError(byte_base + start);
    value = (value << 6) | (bi & 0x3F);
  }

  static constexpr char32_t kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMinForLen[len] || value > 0x10FFFF ||
      (value >= 0xD800 && value <= 0xDFFF)) {
    throw DecodeError(byte_base + start);
  }

  pos = start + len;
  return value;
}

std::u32string decode_utf8(std::string_view bytes, std::size_t byte_base) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) out.push_back(decode_one(bytes, pos, byte_base));
  return out;
}

std::string encode_utf8(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 2);
  for (char32_t c : scalars) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

}  // namespace manfi
