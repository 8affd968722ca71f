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

#include "radixnet/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "radixnet/error.hpp"

namespace radixnet {

namespace {

std::string dims(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

void require_nonzero(Index rows, Index cols, const char* what) {
  if (rows == 0 || cols == 0) {
    throw ShapeError(std::string(what) + ": zero dimension " + dims(rows, cols));
  }
}

}  // namespace

SparseBinaryMatrix::SparseBinaryMatrix(Index rows, Index cols,
                                       std::vector<Coord> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_nonzero(rows_, cols_, "SparseBinaryMatrix");
  for (const Coord& e : entries_) {
    if (e.row >= rows_ || e.col >= cols_) {
      throw ShapeError("entry (" + std::to_string(e.row) + ", " +
                       std::to_string(e.col) + ") outside " +
                       dims(rows_, cols_));
    }
  }
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    std::sort(entries_.begin(), entries_.end());
  }
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
}

SparseBinaryMatrix SparseBinaryMatrix::identity(Index n) {
  return cyclic_shift(n, 0);
}

SparseBinaryMatrix SparseBinaryMatrix::ones(Index rows, Index cols) {
  require_nonzero(rows, cols, "ones");
  std::vector<Coord> entries;
  entries.reserve(detail::checked_mul(rows, cols, "ones entry count"));
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) entries.push_back({r, c});
  }
  return {rows, cols, std::move(entries)};
}

bool SparseBinaryMatrix::contains(Index row, Index col) const {
  return std::binary_search(entries_.begin(), entries_.end(), Coord{row, col});
}

std::vector<Index> SparseBinaryMatrix::row_degrees() const {
  std::vector<Index> deg(rows_, 0);
  for (const Coord& e : entries_) ++deg[e.row];
  return deg;
}

std::vector<Index> SparseBinaryMatrix::col_degrees() const {
  std::vector<Index> deg(cols_, 0);
  for (const Coord& e : entries_) ++deg[e.col];
  return deg;
}

CountMatrix::CountMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
  require_nonzero(rows_, cols_, "CountMatrix");
  values_.resize(detail::checked_mul(rows_, cols_, "CountMatrix size"));
}

CountMatrix::CountMatrix(
    std::initializer_list<std::initializer_list<unsigned>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_nonzero(rows_, cols_, "CountMatrix");
  values_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("CountMatrix: ragged literal");
    for (unsigned v : row) values_.emplace_back(v);
  }
}

CountMatrix::CountMatrix(Index rows, Index cols, std::vector<BigCount> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  require_nonzero(rows_, cols_, "CountMatrix");
  if (values_.size() != detail::checked_mul(rows_, cols_, "CountMatrix size")) {
    throw ShapeError("CountMatrix: " + std::to_string(values_.size()) +
                     " values for " + dims(rows_, cols_));
  }
  for (const BigCount& v : values_) {
    if (v < 0) throw RangeError("CountMatrix: negative value");
  }
}

const BigCount& CountMatrix::at(Index row, Index col) const {
  if (row >= rows_ || col >= cols_) throw ShapeError("CountMatrix::at out of range");
  return values_[row * cols_ + col];
}

void CountMatrix::set(Index row, Index col, BigCount value) {
  if (row >= rows_ || col >= cols_) throw ShapeError("CountMatrix::set out of range");
  if (value < 0) throw RangeError("CountMatrix: negative value");
  values_[row * cols_ + col] = std::move(value);
}

SparseBinaryMatrix cyclic_shift(Index n, std::uint64_t power) {
  if (n == 0) throw ShapeError("cyclic_shift: n must be >= 1");
  const Index shift = power % n;
  std::vector<Coord> entries;
  entries.reserve(n);
  for (Index u = 0; u < n; ++u) {
    // v = (u + shift) mod n without overflowing for n near 2^64.
    const Index v = u < n - shift ? u + shift : u - (n - shift);
    entries.push_back({u, v});
  }
  return {n, n, std::move(entries)};
}

SparseBinaryMatrix kronecker(const SparseBinaryMatrix& a,
                             const SparseBinaryMatrix& b) {
  const Index rows = detail::checked_mul(a.rows(), b.rows(), "kronecker rows");
  const Index cols = detail::checked_mul(a.cols(), b.cols(), "kronecker cols");
  std::vector<Coord> entries;
  entries.reserve(detail::checked_mul(a.nnz(), b.nnz(), "kronecker entries"));
  for (const Coord& ea : a.entries()) {
    for (const Coord& eb : b.entries()) {
      entries.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col});
    }
  }
  return {rows, cols, std::move(entries)};
}

CountMatrix kronecker(const CountMatrix& a, const CountMatrix& b) {
  const Index rows = detail::checked_mul(a.rows(), b.rows(), "kronecker rows");
  const Index cols = detail::checked_mul(a.cols(), b.cols(), "kronecker cols");
  CountMatrix out(rows, cols);
  for (Index ra = 0; ra < a.rows(); ++ra) {
    for (Index ca = 0; ca < a.cols(); ++ca) {
      const BigCount& x = a.at(ra, ca);
      if (x == 0) continue;
      for (Index rb = 0; rb < b.rows(); ++rb) {
        for (Index cb = 0; cb < b.cols(); ++cb) {
          const BigCount& y = b.at(rb, cb);
          if (y != 0) out.set(ra * b.rows() + rb, ca * b.cols() + cb, x * y);
        }
      }
    }
  }
  return out;
}

CountMatrix count_product(const CountMatrix& a, const CountMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("count_product: " + dims(a.rows(), a.cols()) + " * " +
                     dims(b.rows(), b.cols()));
  }
  std::vector<BigCount> out(a.rows() * b.cols());
  const auto av = a.values();
  const auto bv = b.values();
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const BigCount& x = av[i * a.cols() + k];
      if (x == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const BigCount& y = bv[k * b.cols() + j];
        if (y != 0) out[i * b.cols() + j] += x * y;
      }
    }
  }
  return {a.rows(), b.cols(), std::move(out)};
}

CountMatrix count_product(const CountMatrix& a, const SparseBinaryMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("count_product: " + dims(a.rows(), a.cols()) + " * " +
                     dims(b.rows(), b.cols()));
  }
  std::vector<BigCount> out(a.rows() * b.cols());
  const auto av = a.values();
  for (Index i = 0; i < a.rows(); ++i) {
    const BigCount* row_in = av.data() + i * a.cols();
    BigCount* row_out = out.data() + i * b.cols();
    for (const Coord& e : b.entries()) {
      if (row_in[e.row] != 0) row_out[e.col] += row_in[e.row];
    }
  }
  return {a.rows(), b.cols(), std::move(out)};
}

CountMatrix to_counts(const SparseBinaryMatrix& m) {
  CountMatrix out(m.rows(), m.cols());
  for (const Coord& e : m.entries()) out.set(e.row, e.col, 1);
  return out;
}

SparseBinaryMatrix support(const CountMatrix& m) {
  std::vector<Coord> entries;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) entries.push_back({r, c});
    }
  }
  return {m.rows(), m.cols(), std::move(entries)};
}

}  // namespace radixnet
