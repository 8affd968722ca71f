// Copyright (c) 2026 The radixnet Authors. All Rights Reserved.
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace radixnet {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension or size computation does not fit in 64 bits.
class SizeOverflow : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions are incompatible (or zero).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A 1-based position is outside 1..L.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A mixed-radix digit is outside 0..N_i-1, or the digit count is wrong.
class DigitError : public Error {
 public:
  using Error::Error;
};

/// A value is outside 0..N'-1.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// One or more network-parameter constraints are violated. Every violation
/// found is listed, not only the first.
class SpecError : public Error {
 public:
  explicit SpecError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<std::string> violations_;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A filesystem operation failed.
class IoError : public Error {
 public:
  IoError(const std::string& message, std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                                 const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw SizeOverflow(std::string(what) + " overflows 64 bits");
  }
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b,
                                 const char* what) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw SizeOverflow(std::string(what) + " overflows 64 bits");
  }
  return out;
}

}  // namespace detail
}  // namespace radixnet
