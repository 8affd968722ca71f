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

// Exact verification of layered topologies.
//
// Path counts are computed two independent ways: as the ordered product of
// the adjacency submatrices, and by explicit depth-first enumeration of
// every input-to-output path (small instances only). Densities are exact
// rationals. Nothing here uses floating point.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radixnet/matrix.hpp"
#include "radixnet/topology.hpp"

namespace radixnet {

struct VerificationReport {
  std::vector<Index> layer_sizes;
  std::uint64_t edge_count = 0;

  BigCount path_count_min = 0;
  BigCount path_count_max = 0;
  bool is_symmetric = false;
  bool is_path_connected = false;
  bool fnnt_valid = false;

  Rational measured_density = 0;
  Rational theoretical_density = 0;
  BigCount theoretical_path_count = 0;
  /// Closed form evaluated with the total-radix exponent; see
  /// uncorrected_path_count().
  BigCount printed_eq5_value = 0;

  bool density_matches = false;
  bool path_count_matches = false;

  /// True when every structural check and every closed-form comparison holds.
  /// The uncorrected closed form is informational and not part of this.
  bool passed() const {
    return fnnt_valid && is_symmetric && is_path_connected && density_matches &&
           path_count_matches;
  }
};

/// Entry (u, v) is the number of directed paths from input node u to output
/// node v. Throws ShapeError when the submatrix chain does not conform.
CountMatrix path_count_matrix(const LayeredTopology& t);

/// Smallest and largest entry of path_count_matrix(t), without materialising
/// the full matrix as big integers when the counts fit in 64 bits.
struct PathCountRange {
  BigCount min;
  BigCount max;
};
PathCountRange path_count_range(const LayeredTopology& t);

/// Path counts by walking every path from every input node. Returns nullopt
/// as soon as more than max_paths complete paths have been seen.
std::optional<CountMatrix> enumerate_paths(const LayeredTopology& t,
                                           std::uint64_t max_paths);

/// Dimensions chain (layer_sizes agree with every submatrix), there is at
/// least one submatrix, and no submatrix has an empty row or column.
bool check_fnnt(const LayeredTopology& t);

/// Edges over the edge count of the dense network with the same layer sizes.
Rational measured_density(const LayeredTopology& t);

/// Fills every field. A malformed topology yields a report with the failing
/// fields cleared rather than an exception.
VerificationReport verify(const LayeredTopology& t, const RadixNetSpec& spec);

}  // namespace radixnet
