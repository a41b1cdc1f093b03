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

#ifndef MANFI_ERRORS_HPP_
#define MANFI_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace manfi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed UTF-8. byte_offset() points at the first offending byte,
// relative to the start of the stream the caller handed in.
class DecodeError : public Error {
 public:
  explicit DecodeError(std::size_t byte_offset)
      : Error("malformed UTF-8 at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Structural errors in line-oriented inputs (rule files, gold files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_number)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}

  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Input that normalizes and stems to nothing; there is no token to classify.
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& surface)
      : Error("degenerate input: \"" + surface + "\" normalizes to nothing") {}
};

}  // namespace manfi

#endif  // MANFI_ERRORS_HPP_
