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
#include <span>
#include <vector>

namespace radixnet {

/// Mixed-radix numeral system (N_1, ..., N_L) with every N_i >= 2.
///
/// Digit lists are least-significant first: digit n_1 carries place value 1
/// and digit n_i carries place value N_1 * ... * N_{i-1}. The system
/// represents every integer in 0..product()-1 exactly once.
class MixedRadixSystem {
 public:
  /// Throws SpecError for an empty list or a radix below 2, and
  /// SizeOverflow when the product exceeds 64 bits.
  explicit MixedRadixSystem(std::vector<std::uint64_t> radices);

  std::span<const std::uint64_t> radices() const noexcept { return radices_; }
  std::size_t length() const noexcept { return radices_.size(); }

  /// N' = N_1 * ... * N_L.
  std::uint64_t product() const noexcept { return product_; }

  /// nu_i = N_1 * ... * N_{i-1} for 1-based i; place_value(1) == 1.
  /// Throws IndexError outside 1..length().
  std::uint64_t place_value(std::size_t i) const;

  /// sum n_i * nu_i. Throws DigitError on a wrong digit count or a digit
  /// outside 0..N_i-1.
  std::uint64_t encode(std::span<const std::uint64_t> digits) const;

  /// Inverse of encode. Throws RangeError unless value < product().
  std::vector<std::uint64_t> decode(std::uint64_t value) const;

  /// Allocation-free decode into out (size must equal length()).
  void decode_into(std::uint64_t value, std::span<std::uint64_t> out) const;

  friend bool operator==(const MixedRadixSystem&,
                         const MixedRadixSystem&) = default;

 private:
  std::vector<std::uint64_t> radices_;
  std::vector<std::uint64_t> place_values_;
  std::uint64_t product_ = 1;
};

}  // namespace radixnet
