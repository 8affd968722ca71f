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

#include "radixnet/verify.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "radixnet/error.hpp"

namespace radixnet {

namespace {

void require_chain(const LayeredTopology& t) {
  if (t.submatrices.empty()) throw ShapeError("topology has no submatrices");
  for (std::size_t i = 1; i < t.submatrices.size(); ++i) {
    const SparseBinaryMatrix& prev = t.submatrices[i - 1];
    const SparseBinaryMatrix& next = t.submatrices[i];
    if (prev.cols() != next.rows()) {
      throw ShapeError("submatrix " + std::to_string(i) + " has " +
                       std::to_string(prev.cols()) + " columns but submatrix " +
                       std::to_string(i + 1) + " has " +
                       std::to_string(next.rows()) + " rows");
    }
  }
}

// Row-major |U_0| x |U_n| path counts in machine words; nullopt if any
// partial sum overflows.
std::optional<std::vector<std::uint64_t>> propagate_u64(const LayeredTopology& t) {
  const SparseBinaryMatrix& first = t.submatrices.front();
  const Index inputs = first.rows();
  Index width = first.cols();
  std::vector<std::uint64_t> cur(inputs * width, 0);
  for (const Coord& e : first.entries()) cur[e.row * width + e.col] = 1;

  std::vector<std::uint64_t> next;
  for (std::size_t k = 1; k < t.submatrices.size(); ++k) {
    const SparseBinaryMatrix& w = t.submatrices[k];
    const auto entries = w.entries();
    next.assign(inputs * w.cols(), 0);
    bool overflow = false;
    for (Index u = 0; u < inputs; ++u) {
      const std::uint64_t* in = cur.data() + u * width;
      std::uint64_t* out = next.data() + u * w.cols();
      for (const Coord& e : entries) {
        overflow |= __builtin_add_overflow(out[e.col], in[e.row], &out[e.col]);
      }
    }
    if (overflow) return std::nullopt;
    cur.swap(next);
    width = w.cols();
  }
  return cur;
}

CountMatrix propagate_big(const LayeredTopology& t) {
  CountMatrix cur = to_counts(t.submatrices.front());
  for (std::size_t k = 1; k < t.submatrices.size(); ++k) {
    cur = count_product(cur, t.submatrices[k]);
  }
  return cur;
}

}  // namespace

CountMatrix path_count_matrix(const LayeredTopology& t) {
  require_chain(t);
  const Index rows = t.submatrices.front().rows();
  const Index cols = t.submatrices.back().cols();
  if (auto fast = propagate_u64(t)) {
    std::vector<BigCount> values(fast->begin(), fast->end());
    return {rows, cols, std::move(values)};
  }
  return propagate_big(t);
}

PathCountRange path_count_range(const LayeredTopology& t) {
  require_chain(t);
  if (auto fast = propagate_u64(t)) {
    const auto [lo, hi] = std::minmax_element(fast->begin(), fast->end());
    return {BigCount(*lo), BigCount(*hi)};
  }
  const CountMatrix counts = propagate_big(t);
  const auto values = counts.values();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

std::optional<CountMatrix> enumerate_paths(const LayeredTopology& t,
                                           std::uint64_t max_paths) {
  require_chain(t);
  const std::size_t depth = t.submatrices.size();

  // Per-layer CSR adjacency built straight from the sorted coordinates.
  std::vector<std::vector<std::size_t>> offsets(depth);
  std::vector<std::vector<Index>> targets(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    const SparseBinaryMatrix& w = t.submatrices[k];
    offsets[k].assign(w.rows() + 1, 0);
    for (const Coord& e : w.entries()) ++offsets[k][e.row + 1];
    for (Index r = 0; r < w.rows(); ++r) offsets[k][r + 1] += offsets[k][r];
    targets[k].reserve(w.nnz());
    for (const Coord& e : w.entries()) targets[k].push_back(e.col);
  }

  const Index inputs = t.submatrices.front().rows();
  const Index outputs = t.submatrices.back().cols();
  std::vector<std::uint64_t> counts(inputs * outputs, 0);
  std::uint64_t total = 0;

  struct Frame {
    std::size_t layer;  // node layer of `node`
    Index node;
  };
  std::vector<Frame> stack;
  for (Index source = 0; source < inputs; ++source) {
    stack.push_back({0, source});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.layer == depth) {
        ++counts[source * outputs + f.node];
        if (++total > max_paths) return std::nullopt;
        continue;
      }
      const auto& off = offsets[f.layer];
      for (std::size_t i = off[f.node]; i < off[f.node + 1]; ++i) {
        stack.push_back({f.layer + 1, targets[f.layer][i]});
      }
    }
  }
  std::vector<BigCount> values(counts.begin(), counts.end());
  return CountMatrix(inputs, outputs, std::move(values));
}

bool check_fnnt(const LayeredTopology& t) {
  if (t.submatrices.empty()) return false;
  if (t.layer_sizes.size() != t.submatrices.size() + 1) return false;
  for (std::size_t i = 0; i < t.submatrices.size(); ++i) {
    const SparseBinaryMatrix& w = t.submatrices[i];
    if (w.rows() != t.layer_sizes[i] || w.cols() != t.layer_sizes[i + 1]) {
      return false;
    }
    const auto no_zero = [](const std::vector<Index>& deg) {
      return std::find(deg.begin(), deg.end(), Index{0}) == deg.end();
    };
    if (!no_zero(w.row_degrees()) || !no_zero(w.col_degrees())) return false;
  }
  return true;
}

Rational measured_density(const LayeredTopology& t) {
  BigCount edges = 0;
  BigCount dense = 0;
  for (const SparseBinaryMatrix& w : t.submatrices) {
    edges += w.nnz();
    dense += BigCount(w.rows()) * w.cols();
  }
  if (dense == 0) return Rational(0);
  return Rational(edges, dense);
}

VerificationReport verify(const LayeredTopology& t, const RadixNetSpec& spec) {
  VerificationReport r;
  r.layer_sizes = t.layer_sizes;
  r.edge_count = t.edge_count();
  r.fnnt_valid = check_fnnt(t);
  r.measured_density = measured_density(t);
  r.theoretical_density = theoretical_density(spec);
  r.theoretical_path_count = theoretical_path_count(spec);
  r.printed_eq5_value = uncorrected_path_count(spec);
  r.density_matches = r.measured_density == r.theoretical_density;

  try {
    const PathCountRange range = path_count_range(t);
    r.path_count_min = range.min;
    r.path_count_max = range.max;
  } catch (const ShapeError&) {
    return r;
  }
  r.is_path_connected = r.path_count_min >= 1;
  // Symmetry requires one positive count shared by every pair.
  r.is_symmetric = r.is_path_connected && r.path_count_min == r.path_count_max;
  r.path_count_matches = r.is_symmetric &&
                         r.path_count_min == r.theoretical_path_count;
  return r;
}

}  // namespace radixnet
