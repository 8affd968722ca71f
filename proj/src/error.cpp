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

#include "radixnet/error.hpp"

#include <utility>

namespace radixnet {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out;
  for (const std::string& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

std::string with_position(const std::string& message, std::size_t line,
                          std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + message;
}

}  // namespace

SpecError::SpecError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(with_position(message, line, column)), line_(line), column_(column) {}

IoError::IoError(const std::string& message, std::filesystem::path path)
    : Error(message + ": " + path.string()), path_(std::move(path)) {}

}  // namespace radixnet
