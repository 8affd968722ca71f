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

// RadiX-Net construction.
//
// A network is parameterised by an ordered list of mixed-radix systems and a
// list of dense widths D_0..D_T, where T is the total number of radices over
// all systems. Every system is laid out on N' nodes per layer (N' is the
// common product of all but the last system; the last system's product must
// divide N'). Concatenating the systems gives T circulant submatrices
// W_k = sum_n P^(n * nu_k); the network's submatrix k is ones(D_{k-1}, D_k)
// Kronecker W_k.
//
// Layer counts: a network has T+1 node layers and T edge layers
// (submatrices). Functions below say which one they mean.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radixnet/matrix.hpp"
#include "radixnet/mixed_radix.hpp"

namespace radixnet {

class RadixNetSpec {
 public:
  /// Validates every constraint and throws SpecError listing all violations.
  RadixNetSpec(std::vector<MixedRadixSystem> systems,
               std::vector<Index> dense_widths);

  /// Same, from raw radix lists, so invalid radices are reported together
  /// with the network-level violations.
  static RadixNetSpec from_lists(
      const std::vector<std::vector<std::uint64_t>>& radix_systems,
      std::vector<Index> dense_widths);

  const std::vector<MixedRadixSystem>& systems() const noexcept {
    return systems_;
  }
  const std::vector<Index>& dense_widths() const noexcept {
    return dense_widths_;
  }

  /// M, the number of mixed-radix systems.
  std::size_t system_count() const noexcept { return systems_.size(); }

  /// Total radix count over all systems; equals the number of edge layers.
  std::size_t total_radices() const noexcept { return flattened_.size(); }

  /// N', the node count of every mixed-radix layer.
  Index base_width() const noexcept { return base_width_; }

  /// Product of the last system (divides base_width()).
  Index last_product() const noexcept { return systems_.back().product(); }

  /// All radices in order, system by system.
  const std::vector<std::uint64_t>& flattened_radices() const noexcept {
    return flattened_;
  }

  /// Advisory notes (dense widths that are not small next to N').
  const std::vector<std::string>& warnings() const noexcept {
    return warnings_;
  }

  friend bool operator==(const RadixNetSpec& a, const RadixNetSpec& b) {
    return a.systems_ == b.systems_ && a.dense_widths_ == b.dense_widths_;
  }

 private:
  std::vector<MixedRadixSystem> systems_;
  std::vector<Index> dense_widths_;
  std::vector<std::uint64_t> flattened_;
  Index base_width_ = 0;
  std::vector<std::string> warnings_;
};

/// Every constraint violated by the raw parameters, in a stable order.
/// Empty means the parameters form a valid network.
std::vector<std::string> spec_violations(
    const std::vector<std::vector<std::uint64_t>>& radix_systems,
    const std::vector<Index>& dense_widths);

/// Feedforward layered graph: layer_sizes has one entry per node layer and
/// submatrices[i] connects node layer i to node layer i+1. Not validated on
/// construction; see check_fnnt().
struct LayeredTopology {
  std::vector<Index> layer_sizes;
  std::vector<SparseBinaryMatrix> submatrices;

  std::uint64_t edge_count() const;

  friend bool operator==(const LayeredTopology&,
                         const LayeredTopology&) = default;
};

/// Submatrix i (1-based i = 1..L) on node_count nodes per layer has (u, v)
/// iff v == u + n * nu_i (mod node_count) for some n in 0..N_i-1.
/// Throws SpecError unless system.product() divides node_count.
std::vector<SparseBinaryMatrix> build_mixed_radix_layers(
    const MixedRadixSystem& system, Index node_count);

/// Node layer i has D_i * N' nodes.
LayeredTopology build_radix_net(const RadixNetSpec& spec);

/// Exact edge density: sum N_k D_{k-1} D_k / (N' * sum D_{k-1} D_k).
Rational theoretical_density(const RadixNetSpec& spec);

/// mean(radices) / N' as an exact fraction.
Rational approximate_density_exact(const RadixNetSpec& spec);

/// mean(radices) / N'.
double approximate_density(const RadixNetSpec& spec);

/// Paths between any input and any output node:
/// N'^(M-2) * product(last system) * D_1 * ... * D_{T-1}.
/// For M == 1 the leading factors cancel to 1.
BigCount theoretical_path_count(const RadixNetSpec& spec);

/// The same closed form with the exponent taken as T-2 (total radices)
/// instead of M-2. Kept for reporting; it overcounts whenever a system has
/// more than one radix.
BigCount uncorrected_path_count(const RadixNetSpec& spec);

}  // namespace radixnet
