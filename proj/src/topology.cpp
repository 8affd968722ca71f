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

#include "radixnet/topology.hpp"

#include <numeric>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "radixnet/error.hpp"

namespace radixnet {

namespace {

std::optional<std::uint64_t> checked_product(
    const std::vector<std::uint64_t>& radices) {
  std::uint64_t p = 1;
  for (std::uint64_t r : radices) {
    if (__builtin_mul_overflow(p, r, &p)) return std::nullopt;
  }
  return p;
}

std::vector<std::vector<std::uint64_t>> radix_lists(
    const std::vector<MixedRadixSystem>& systems) {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(systems.size());
  for (const MixedRadixSystem& s : systems) {
    out.emplace_back(s.radices().begin(), s.radices().end());
  }
  return out;
}

BigCount power(const BigCount& base, std::size_t exponent) {
  BigCount out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigCount interior_width_product(const RadixNetSpec& spec) {
  const auto& d = spec.dense_widths();
  BigCount out = 1;
  for (std::size_t i = 1; i + 1 < d.size(); ++i) out *= d[i];
  return out;
}

// base^(exponent) * last_product * interior widths, where exponent may be -1.
BigCount path_closed_form(const RadixNetSpec& spec, long exponent) {
  const BigCount base = spec.base_width();
  BigCount value = BigCount(spec.last_product()) * interior_width_product(spec);
  if (exponent >= 0) return power(base, static_cast<std::size_t>(exponent)) * value;
  // Only reachable with a single system, whose product is base itself.
  const BigCount divisor = power(base, static_cast<std::size_t>(-exponent));
  return value / divisor;
}

}  // namespace

std::vector<std::string> spec_violations(
    const std::vector<std::vector<std::uint64_t>>& radix_systems,
    const std::vector<Index>& dense_widths) {
  std::vector<std::string> out;
  if (radix_systems.empty()) {
    out.emplace_back("radix_systems must contain at least one system");
  }

  bool products_known = !radix_systems.empty();
  std::vector<std::uint64_t> products;
  std::size_t total_radices = 0;
  for (std::size_t i = 0; i < radix_systems.size(); ++i) {
    const auto& radices = radix_systems[i];
    const std::string name = "system " + std::to_string(i + 1);
    total_radices += radices.size();
    if (radices.empty()) {
      out.push_back(name + " is empty");
      products_known = false;
      continue;
    }
    bool radices_ok = true;
    for (std::size_t j = 0; j < radices.size(); ++j) {
      if (radices[j] < 2) {
        out.push_back(name + " radix " + std::to_string(j + 1) + " is " +
                      std::to_string(radices[j]) + ", must be >= 2");
        radices_ok = false;
      }
    }
    const auto p = checked_product(radices);
    if (!p) out.push_back(name + " product overflows 64 bits");
    if (!p || !radices_ok) {
      products_known = false;
      continue;
    }
    products.push_back(*p);
  }

  std::optional<std::uint64_t> base;
  if (products_known) {
    base = products.front();
    const std::size_t m = products.size();
    for (std::size_t i = 1; i + 1 < m; ++i) {
      if (products[i] != *base) {
        out.push_back("product mismatch: system " + std::to_string(i + 1) +
                      " has product " + std::to_string(products[i]) +
                      ", expected " + std::to_string(*base));
      }
    }
    if (m >= 2 && *base % products.back() != 0) {
      out.push_back("product mismatch: last system " + std::to_string(m) +
                    " has product " + std::to_string(products.back()) +
                    ", which does not divide " + std::to_string(*base));
    }
  }

  if (dense_widths.size() != total_radices + 1) {
    out.push_back("dense_widths length " + std::to_string(dense_widths.size()) +
                  ", expected M̄+1 = " + std::to_string(total_radices + 1));
  }
  for (std::size_t i = 0; i < dense_widths.size(); ++i) {
    if (dense_widths[i] == 0) {
      out.push_back("dense_widths[" + std::to_string(i) + "] is 0, must be >= 1");
    } else if (base) {
      std::uint64_t size = 0;
      if (__builtin_mul_overflow(dense_widths[i], *base, &size)) {
        out.push_back("dense_widths[" + std::to_string(i) +
                      "] times N' overflows 64 bits");
      }
    }
  }
  return out;
}

RadixNetSpec::RadixNetSpec(std::vector<MixedRadixSystem> systems,
                           std::vector<Index> dense_widths)
    : systems_(std::move(systems)), dense_widths_(std::move(dense_widths)) {
  auto violations = spec_violations(radix_lists(systems_), dense_widths_);
  if (!violations.empty()) throw SpecError(std::move(violations));

  base_width_ = systems_.front().product();
  for (const MixedRadixSystem& s : systems_) {
    flattened_.insert(flattened_.end(), s.radices().begin(), s.radices().end());
  }
  for (std::size_t i = 0; i < dense_widths_.size(); ++i) {
    if (dense_widths_[i] >= base_width_) {
      warnings_.push_back("dense_widths[" + std::to_string(i) + "] = " +
                          std::to_string(dense_widths_[i]) +
                          " is not small compared to N' = " +
                          std::to_string(base_width_));
    }
  }
}

RadixNetSpec RadixNetSpec::from_lists(
    const std::vector<std::vector<std::uint64_t>>& radix_systems,
    std::vector<Index> dense_widths) {
  auto violations = spec_violations(radix_systems, dense_widths);
  if (!violations.empty()) throw SpecError(std::move(violations));
  std::vector<MixedRadixSystem> systems;
  systems.reserve(radix_systems.size());
  for (const auto& radices : radix_systems) systems.emplace_back(radices);
  return {std::move(systems), std::move(dense_widths)};
}

std::uint64_t LayeredTopology::edge_count() const {
  std::uint64_t total = 0;
  for (const SparseBinaryMatrix& w : submatrices) {
    total = detail::checked_add(total, w.nnz(), "edge count");
  }
  return total;
}

std::vector<SparseBinaryMatrix> build_mixed_radix_layers(
    const MixedRadixSystem& system, Index node_count) {
  if (node_count == 0 || node_count % system.product() != 0) {
    throw SpecError({"mixed-radix product " + std::to_string(system.product()) +
                     " does not divide node count " +
                     std::to_string(node_count)});
  }
  std::vector<SparseBinaryMatrix> layers;
  layers.reserve(system.length());
  for (std::size_t i = 1; i <= system.length(); ++i) {
    const std::uint64_t radix = system.radices()[i - 1];
    const std::uint64_t nu = system.place_value(i);
    std::vector<Coord> entries;
    entries.reserve(node_count * radix);
    for (Index u = 0; u < node_count; ++u) {
      for (std::uint64_t n = 0; n < radix; ++n) {
        // n * nu < product(system) <= node_count
        const Index shift = n * nu;
        const Index v = u < node_count - shift ? u + shift
                                               : u - (node_count - shift);
        entries.push_back({u, v});
      }
    }
    layers.emplace_back(node_count, node_count, std::move(entries));
  }
  return layers;
}

LayeredTopology build_radix_net(const RadixNetSpec& spec) {
  const Index base = spec.base_width();
  const auto& widths = spec.dense_widths();

  LayeredTopology out;
  out.layer_sizes.reserve(widths.size());
  for (Index d : widths) {
    out.layer_sizes.push_back(detail::checked_mul(d, base, "layer size"));
  }

  out.submatrices.reserve(spec.total_radices());
  std::size_t k = 0;
  for (const MixedRadixSystem& system : spec.systems()) {
    for (SparseBinaryMatrix& w : build_mixed_radix_layers(system, base)) {
      out.submatrices.push_back(
          kronecker(SparseBinaryMatrix::ones(widths[k], widths[k + 1]), w));
      ++k;
    }
  }
  return out;
}

Rational theoretical_density(const RadixNetSpec& spec) {
  const auto& radices = spec.flattened_radices();
  const auto& d = spec.dense_widths();
  BigCount numerator = 0;
  BigCount dense = 0;
  for (std::size_t k = 1; k <= radices.size(); ++k) {
    const BigCount block = BigCount(d[k - 1]) * d[k];
    numerator += block * radices[k - 1];
    dense += block;
  }
  return Rational(numerator, dense * spec.base_width());
}

Rational approximate_density_exact(const RadixNetSpec& spec) {
  const auto& radices = spec.flattened_radices();
  const BigCount sum = std::accumulate(radices.begin(), radices.end(), BigCount(0));
  return Rational(sum, BigCount(radices.size()) * spec.base_width());
}

double approximate_density(const RadixNetSpec& spec) {
  return approximate_density_exact(spec).convert_to<double>();
}

BigCount theoretical_path_count(const RadixNetSpec& spec) {
  return path_closed_form(spec, static_cast<long>(spec.system_count()) - 2);
}

BigCount uncorrected_path_count(const RadixNetSpec& spec) {
  return path_closed_form(spec, static_cast<long>(spec.total_radices()) - 2);
}

}  // namespace radixnet
