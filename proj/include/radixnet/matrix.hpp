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

// Exact 0/1 sparse matrices and unbounded integer count matrices.
//
// SparseBinaryMatrix holds adjacency submatrices as a sorted coordinate set.
// CountMatrix holds path counts; its values are arbitrary precision so that
// long chains never wrap.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace radixnet {

using Index = std::uint64_t;
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 0-based (row, col) position. Ordering is lexicographic.
struct Coord {
  Index row = 0;
  Index col = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

class SparseBinaryMatrix {
 public:
  /// Entries are sorted and de-duplicated. Throws ShapeError if either
  /// dimension is zero or an entry lies outside rows x cols.
  SparseBinaryMatrix(Index rows, Index cols, std::vector<Coord> entries);

  static SparseBinaryMatrix identity(Index n);
  static SparseBinaryMatrix ones(Index rows, Index cols);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  /// Strictly ascending (row, col).
  std::span<const Coord> entries() const& noexcept { return entries_; }
  std::span<const Coord> entries() const&& = delete;

  bool contains(Index row, Index col) const;

  std::vector<Index> row_degrees() const;
  std::vector<Index> col_degrees() const;

  friend bool operator==(const SparseBinaryMatrix&,
                         const SparseBinaryMatrix&) = default;

 private:
  Index rows_;
  Index cols_;
  std::vector<Coord> entries_;
};

/// Dense rows x cols grid of non-negative integers, row-major.
class CountMatrix {
 public:
  /// Zero-filled. Throws ShapeError on a zero dimension.
  CountMatrix(Index rows, Index cols);

  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}. Rows must be equal length.
  CountMatrix(std::initializer_list<std::initializer_list<unsigned>> rows);

  /// Takes ownership of row-major values; size must equal rows * cols.
  CountMatrix(Index rows, Index cols, std::vector<BigCount> values);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }

  const BigCount& at(Index row, Index col) const;
  void set(Index row, Index col, BigCount value);

  std::span<const BigCount> values() const& noexcept { return values_; }
  std::span<const BigCount> values() const&& = delete;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  Index rows_;
  Index cols_;
  std::vector<BigCount> values_;
};

/// n x n matrix with (u, v) set iff v == (u + power) mod n. This is the
/// cyclic shift sending node u to node u + power, so power 1 is the
/// transpose of the matrix with a single 1 in its top-right corner.
SparseBinaryMatrix cyclic_shift(Index n, std::uint64_t power);

/// Kronecker product; entry (ra*b.rows+rb, ca*b.cols+cb) for every pair of
/// entries. Throws SizeOverflow when a result dimension exceeds 64 bits.
SparseBinaryMatrix kronecker(const SparseBinaryMatrix& a,
                             const SparseBinaryMatrix& b);
CountMatrix kronecker(const CountMatrix& a, const CountMatrix& b);

/// Exact integer product. Throws ShapeError unless a.cols == b.rows.
CountMatrix count_product(const CountMatrix& a, const CountMatrix& b);

/// Product with a 0/1 right operand; same result as
/// count_product(a, to_counts(b)) without densifying b.
CountMatrix count_product(const CountMatrix& a, const SparseBinaryMatrix& b);

CountMatrix to_counts(const SparseBinaryMatrix& m);

/// Positions of the non-zero values.
SparseBinaryMatrix support(const CountMatrix& m);

}  // namespace radixnet
