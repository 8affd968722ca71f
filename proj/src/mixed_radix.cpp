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

#include "radixnet/mixed_radix.hpp"

#include <string>
#include <utility>

#include "radixnet/error.hpp"

namespace radixnet {

MixedRadixSystem::MixedRadixSystem(std::vector<std::uint64_t> radices)
    : radices_(std::move(radices)) {
  std::vector<std::string> violations;
  if (radices_.empty()) violations.emplace_back("mixed-radix system is empty");
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] < 2) {
      violations.push_back("radix " + std::to_string(i + 1) + " is " +
                           std::to_string(radices_[i]) + ", must be >= 2");
    }
  }
  if (!violations.empty()) throw SpecError(std::move(violations));

  place_values_.reserve(radices_.size());
  for (std::uint64_t r : radices_) {
    place_values_.push_back(product_);
    product_ = detail::checked_mul(product_, r, "mixed-radix product");
  }
}

std::uint64_t MixedRadixSystem::place_value(std::size_t i) const {
  if (i < 1 || i > radices_.size()) {
    throw IndexError("place_value position " + std::to_string(i) +
                     " outside 1.." + std::to_string(radices_.size()));
  }
  return place_values_[i - 1];
}

std::uint64_t MixedRadixSystem::encode(
    std::span<const std::uint64_t> digits) const {
  if (digits.size() != radices_.size()) {
    throw DigitError("expected " + std::to_string(radices_.size()) +
                     " digits, got " + std::to_string(digits.size()));
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= radices_[i]) {
      throw DigitError("digit " + std::to_string(i + 1) + " is " +
                       std::to_string(digits[i]) + ", radix is " +
                       std::to_string(radices_[i]));
    }
    value += digits[i] * place_values_[i];
  }
  return value;
}

std::vector<std::uint64_t> MixedRadixSystem::decode(std::uint64_t value) const {
  std::vector<std::uint64_t> digits(radices_.size());
  decode_into(value, digits);
  return digits;
}

void MixedRadixSystem::decode_into(std::uint64_t value,
                                   std::span<std::uint64_t> out) const {
  if (value >= product_) {
    throw RangeError("value " + std::to_string(value) + " outside 0.." +
                     std::to_string(product_ - 1));
  }
  if (out.size() != radices_.size()) {
    throw DigitError("decode buffer holds " + std::to_string(out.size()) +
                     " digits, system has " + std::to_string(radices_.size()));
  }
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    out[i] = value % radices_[i];
    value /= radices_[i];
  }
}

}  // namespace radixnet
