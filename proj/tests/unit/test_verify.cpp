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

#include "doctest.h"

#include "oracle.hpp"
#include "radixnet/error.hpp"
#include "radixnet/verify.hpp"
#include "spec_sampler.hpp"

using namespace radixnet;

namespace {

RadixNetSpec make(const std::vector<std::vector<std::uint64_t>>& systems,
                  std::vector<Index> widths) {
  return RadixNetSpec::from_lists(systems, std::move(widths));
}

LayeredTopology without_edge(const LayeredTopology& t, std::size_t layer,
                             std::size_t index) {
  LayeredTopology out = t;
  const auto& w = t.submatrices[layer];
  std::vector<Coord> entries(w.entries().begin(), w.entries().end());
  entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(index));
  out.submatrices[layer] = SparseBinaryMatrix(w.rows(), w.cols(), std::move(entries));
  return out;
}

bool constant(const CountMatrix& m, const BigCount& v) {
  for (const auto& x : m.values())
    if (x != v) return false;
  return true;
}

}  // namespace

TEST_CASE("path_count_matrix") {
  SUBCASE("single (2,2,2) system: one path per pair") {
    const auto net = build_radix_net(make({{2, 2, 2}}, {1, 1, 1, 1}));
    const auto counts = path_count_matrix(net);
    CHECK(counts.rows() == 8);
    CHECK(counts.cols() == 8);
    CHECK(constant(counts, 1));
  }
  SUBCASE("two concatenated (2,2,2) systems: eight paths per pair") {
    const auto net = build_radix_net(make({{2, 2, 2}, {2, 2, 2}}, std::vector<Index>(7, 1)));
    CHECK(constant(path_count_matrix(net), 8));
  }
  SUBCASE("one identity layer") {
    const LayeredTopology t{{3, 3}, {SparseBinaryMatrix::identity(3)}};
    CHECK(path_count_matrix(t) == to_counts(SparseBinaryMatrix::identity(3)));
  }
  SUBCASE("non-conforming chain") {
    const LayeredTopology t{{2, 2, 3},
                            {SparseBinaryMatrix::ones(2, 2), SparseBinaryMatrix::ones(3, 3)}};
    CHECK_THROWS_AS(path_count_matrix(t), ShapeError);
    CHECK_THROWS_AS(enumerate_paths(t, 100), ShapeError);
  }
  SUBCASE("counts beyond 64 bits fall back to exact arithmetic") {
    LayeredTopology t;
    t.layer_sizes.assign(71, 2);
    t.submatrices.assign(70, SparseBinaryMatrix::ones(2, 2));
    const BigCount expected = BigCount(1) << 69;
    CHECK(constant(path_count_matrix(t), expected));
    const auto range = path_count_range(t);
    CHECK(range.min == expected);
    CHECK(range.max == expected);
  }
}

TEST_CASE("enumerate_paths") {
  const auto net = build_radix_net(make({{2, 2, 2}}, {1, 1, 1, 1}));
  SUBCASE("agrees with the product on the (2,2,2) system") {
    const auto enumerated = enumerate_paths(net, 64);
    REQUIRE(enumerated.has_value());
    CHECK(*enumerated == path_count_matrix(net));
  }
  SUBCASE("gives up past the limit") { CHECK_FALSE(enumerate_paths(net, 63).has_value()); }
  SUBCASE("agrees with a dense walk on small sampled networks") {
    sampling::SpecSampler sampler(17);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
      const auto raw = sampler.sample(12, 3, 2, false);
      const auto spec = make(raw.systems, raw.widths);
      const auto built = build_radix_net(spec);
      const auto enumerated = enumerate_paths(built, 10000);
      if (!enumerated) continue;
      const auto dense = oracle::brute_force_paths(oracle::network(raw.systems, raw.widths));
      for (Index r = 0; r < enumerated->rows(); ++r)
        for (Index c = 0; c < enumerated->cols(); ++c)
          CHECK(enumerated->at(r, c) == dense[r][c]);
      CHECK(*enumerated == path_count_matrix(built));
      ++checked;
    }
    CHECK(checked >= 20);
  }
}

TEST_CASE("check_fnnt") {
  SUBCASE("built networks are valid") {
    sampling::SpecSampler sampler(23);
    for (int t = 0; t < 20; ++t) {
      const auto raw = sampler.sample(40, 3, 3, false);
      CHECK(check_fnnt(build_radix_net(make(raw.systems, raw.widths))));
    }
  }
  SUBCASE("zero column") {
    const LayeredTopology t{{2, 2}, {SparseBinaryMatrix(2, 2, {{0, 0}, {1, 0}})}};
    CHECK_FALSE(check_fnnt(t));
  }
  SUBCASE("zero row") {
    const LayeredTopology t{{2, 2}, {SparseBinaryMatrix(2, 2, {{0, 0}, {0, 1}})}};
    CHECK_FALSE(check_fnnt(t));
  }
  SUBCASE("mismatched chain") {
    const LayeredTopology t{{2, 3, 3},
                            {SparseBinaryMatrix::ones(2, 3), SparseBinaryMatrix::ones(2, 3)}};
    CHECK_FALSE(check_fnnt(t));
  }
  SUBCASE("layer sizes disagree with the submatrices") {
    CHECK_FALSE(check_fnnt({{2, 4}, {SparseBinaryMatrix::ones(2, 3)}}));
    CHECK_FALSE(check_fnnt({{2}, {SparseBinaryMatrix::ones(2, 3)}}));
  }
  SUBCASE("no layers") { CHECK_FALSE(check_fnnt({{4}, {}})); }
}

TEST_CASE("verify") {
  SUBCASE("single (2,2,2) system") {
    const auto spec = make({{2, 2, 2}}, {1, 1, 1, 1});
    const auto r = verify(build_radix_net(spec), spec);
    CHECK(r.is_symmetric);
    CHECK(r.is_path_connected);
    CHECK(r.fnnt_valid);
    CHECK(r.path_count_min == 1);
    CHECK(r.path_count_max == 1);
    CHECK(r.measured_density == Rational(1, 4));
    CHECK(r.theoretical_density == Rational(1, 4));
    CHECK(r.theoretical_path_count == 1);
    CHECK(r.printed_eq5_value == 64);
    CHECK(r.passed());
  }
  SUBCASE("single (3,3,4) system") {
    const auto spec = make({{3, 3, 4}}, {1, 1, 1, 1});
    const auto r = verify(build_radix_net(spec), spec);
    CHECK(r.is_symmetric);
    CHECK(r.path_count_min == 1);
    CHECK(r.measured_density == Rational(5, 54));
    CHECK(r.passed());
  }
  SUBCASE("deleting an edge breaks symmetry") {
    const auto spec = make({{2, 2, 2}}, {1, 1, 1, 1});
    const auto r = verify(without_edge(build_radix_net(spec), 1, 5), spec);
    CHECK_FALSE(r.is_symmetric);
    CHECK_FALSE(r.is_path_connected);
    CHECK(r.path_count_min == 0);
    CHECK_FALSE(r.density_matches);
    CHECK_FALSE(r.passed());
  }
  SUBCASE("malformed topology is reported, not thrown") {
    const auto spec = make({{2}}, {1, 1});
    const LayeredTopology t{{2, 2, 3},
                            {SparseBinaryMatrix::ones(2, 2), SparseBinaryMatrix::ones(3, 3)}};
    VerificationReport r;
    CHECK_NOTHROW(r = verify(t, spec));
    CHECK_FALSE(r.fnnt_valid);
    CHECK_FALSE(r.is_symmetric);
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("every single-edge deletion from a one-path network disconnects a pair") {
  const auto net = build_radix_net(make({{2, 3}}, {1, 1, 1}));
  REQUIRE(verify(net, make({{2, 3}}, {1, 1, 1})).path_count_min == 1);
  for (std::size_t layer = 0; layer < net.submatrices.size(); ++layer) {
    for (std::size_t i = 0; i < net.submatrices[layer].nnz(); ++i) {
      CHECK(path_count_range(without_edge(net, layer, i)).min == 0);
    }
  }
}

TEST_CASE("report invariants hold over sampled specs") {
  sampling::SpecSampler sampler(31);
  for (int t = 0; t < 60; ++t) {
    const auto raw = sampler.sample(100, 4, 3, false);
    const auto spec = make(raw.systems, raw.widths);
    const auto r = verify(build_radix_net(spec), spec);
    CHECK(r.is_symmetric == (r.path_count_min == r.path_count_max));
    CHECK(r.is_path_connected == (r.path_count_min >= 1));
    CHECK(r.is_symmetric);
    CHECK(r.path_count_min == theoretical_path_count(spec));
    CHECK(r.measured_density == r.theoretical_density);
    CHECK(r.passed());
  }
}
