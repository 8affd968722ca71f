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

#include <random>

#include "oracle.hpp"
#include "radixnet/error.hpp"
#include "radixnet/matrix.hpp"

using namespace radixnet;

namespace {

std::vector<Coord> coords(std::initializer_list<std::pair<Index, Index>> list) {
  std::vector<Coord> out;
  for (auto [r, c] : list) out.push_back({r, c});
  return out;
}

oracle::Dense dense_of(const CountMatrix& m) {
  oracle::Dense out = oracle::zeros(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  return out;
}

oracle::Dense dense_of(const SparseBinaryMatrix& m) {
  return dense_of(to_counts(m));
}

SparseBinaryMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::bernoulli_distribution coin(0.4);
  std::vector<Coord> entries;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      if (coin(rng)) entries.push_back({r, c});
  return {rows, cols, std::move(entries)};
}

}  // namespace

TEST_CASE("SparseBinaryMatrix keeps entries sorted and unique") {
  SparseBinaryMatrix m(3, 3, coords({{2, 0}, {0, 1}, {0, 1}, {1, 2}, {0, 0}}));
  CHECK(m.nnz() == 4);
  const auto e = m.entries();
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1] < e[i]);
  CHECK(m.contains(2, 0));
  CHECK_FALSE(m.contains(2, 2));
  CHECK(m.row_degrees() == std::vector<Index>{2, 1, 1});
  CHECK(m.col_degrees() == std::vector<Index>{2, 1, 1});
}

TEST_CASE("SparseBinaryMatrix rejects bad shapes") {
  CHECK_THROWS_AS(SparseBinaryMatrix(0, 3, {}), ShapeError);
  CHECK_THROWS_AS(SparseBinaryMatrix(2, 2, coords({{2, 0}})), ShapeError);
  CHECK_THROWS_AS(SparseBinaryMatrix(2, 2, coords({{0, 5}})), ShapeError);
}

TEST_CASE("cyclic_shift") {
  SUBCASE("zero power is the identity") {
    const auto m = cyclic_shift(3, 0);
    CHECK(m == SparseBinaryMatrix(3, 3, coords({{0, 0}, {1, 1}, {2, 2}})));
    CHECK(m == SparseBinaryMatrix::identity(3));
  }
  SUBCASE("shift by 4 on 8 nodes") {
    CHECK(cyclic_shift(8, 4) ==
          SparseBinaryMatrix(8, 8, coords({{0, 4}, {1, 5}, {2, 6}, {3, 7},
                                           {4, 0}, {5, 1}, {6, 2}, {7, 3}})));
  }
  SUBCASE("power is reduced mod n") {
    CHECK(cyclic_shift(8, 9) == cyclic_shift(8, 1));
    CHECK(cyclic_shift(5, 5) == SparseBinaryMatrix::identity(5));
  }
  SUBCASE("power 1 sends u to u + 1") {
    const auto p = cyclic_shift(4, 1);
    CHECK(p.nnz() == 4);
    CHECK(p.contains(0, 1));
    CHECK(p.contains(3, 0));
    CHECK_FALSE(p.contains(0, 3));
  }
  SUBCASE("n = 0 is rejected") { CHECK_THROWS_AS(cyclic_shift(0, 1), ShapeError); }
  SUBCASE("huge powers") {
    CHECK(cyclic_shift(3, ~std::uint64_t{0}) == cyclic_shift(3, (~std::uint64_t{0}) % 3));
  }
}

TEST_CASE("cyclic shifts compose additively and cycle with period n") {
  for (Index n : {1u, 2u, 5u, 8u}) {
    for (std::uint64_t j = 0; j < 2 * n; ++j) {
      for (std::uint64_t k = 0; k < 2 * n; ++k) {
        const auto prod = count_product(to_counts(cyclic_shift(n, j)),
                                        to_counts(cyclic_shift(n, k)));
        CHECK(support(prod) == cyclic_shift(n, j + k));
        CHECK(prod == count_product(to_counts(cyclic_shift(n, k)),
                                    to_counts(cyclic_shift(n, j))));
      }
    }
    CHECK(cyclic_shift(n, n) == SparseBinaryMatrix::identity(n));
  }
}

TEST_CASE("kronecker") {
  SUBCASE("identity with identity") {
    CHECK(kronecker(SparseBinaryMatrix::identity(2), SparseBinaryMatrix::identity(2)) ==
          SparseBinaryMatrix::identity(4));
  }
  SUBCASE("ones(1,2) with I2") {
    const auto k = kronecker(SparseBinaryMatrix::ones(1, 2), SparseBinaryMatrix::identity(2));
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k == SparseBinaryMatrix(2, 4, coords({{0, 0}, {1, 1}, {0, 2}, {1, 3}})));
    const auto e = k.entries();
    CHECK(e[0] == Coord{0, 0});
    CHECK(e[1] == Coord{0, 2});
    CHECK(e[2] == Coord{1, 1});
    CHECK(e[3] == Coord{1, 3});
  }
  SUBCASE("ones with ones") {
    const auto k = kronecker(SparseBinaryMatrix::ones(2, 2), SparseBinaryMatrix::ones(3, 3));
    CHECK(k == SparseBinaryMatrix::ones(6, 6));
    CHECK(k.nnz() == 36);
  }
  SUBCASE("dimension overflow") {
    const Index big = Index{1} << 40;
    SparseBinaryMatrix a(big, 1, {});
    CHECK_THROWS_AS(kronecker(a, a), SizeOverflow);
  }
}

TEST_CASE("kronecker matches the dense definition and multiplies entry counts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Index> dim(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng));
    const auto b = random_matrix(rng, dim(rng), dim(rng));
    const auto k = kronecker(a, b);
    CHECK(k.nnz() == a.nnz() * b.nnz());
    CHECK(dense_of(k) == oracle::kron(dense_of(a), dense_of(b)));
    CHECK(to_counts(k) == kronecker(to_counts(a), to_counts(b)));
  }
}

TEST_CASE("Kronecker mixed-product identity on random chains") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> dim(1, 6);
  std::uniform_int_distribution<int> len(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = len(rng);
    std::vector<Index> da{dim(rng)}, db{dim(rng)};
    for (int i = 0; i < n; ++i) {
      da.push_back(dim(rng));
      db.push_back(dim(rng));
    }
    std::vector<SparseBinaryMatrix> as, bs;
    for (int i = 0; i < n; ++i) {
      as.push_back(random_matrix(rng, da[i], da[i + 1]));
      bs.push_back(random_matrix(rng, db[i], db[i + 1]));
    }
    CountMatrix combined = to_counts(kronecker(as[0], bs[0]));
    CountMatrix chain_a = to_counts(as[0]);
    CountMatrix chain_b = to_counts(bs[0]);
    for (int i = 1; i < n; ++i) {
      combined = count_product(combined, to_counts(kronecker(as[i], bs[i])));
      chain_a = count_product(chain_a, to_counts(as[i]));
      chain_b = count_product(chain_b, to_counts(bs[i]));
    }
    CHECK(combined == kronecker(chain_a, chain_b));
  }
}

TEST_CASE("count_product") {
  SUBCASE("identity on the left") {
    const CountMatrix x{{3, 0, 7}, {1, 2, 5}};
    CHECK(count_product(to_counts(SparseBinaryMatrix::identity(2)), x) == x);
  }
  SUBCASE("ones(8,8) squared is constant 8") {
    const auto ones = to_counts(SparseBinaryMatrix::ones(8, 8));
    const auto sq = count_product(ones, ones);
    for (const auto& v : sq.values()) CHECK(v == 8);
  }
  SUBCASE("first two layers of the (2,2,2) mixed-radix topology") {
    // W1 = I + P, W2 = I + P^2 on 8 nodes.
    const auto w1 = oracle::circulant_layer(8, 2, 1);
    const auto w2 = oracle::circulant_layer(8, 2, 2);
    const auto expected = oracle::brute_force_paths({w1, w2});

    CountMatrix a(8, 8), b(8, 8);
    for (Index r = 0; r < 8; ++r)
      for (Index c = 0; c < 8; ++c) {
        a.set(r, c, w1[r][c]);
        b.set(r, c, w2[r][c]);
      }
    const auto prod = count_product(a, b);
    CHECK(dense_of(prod) == expected);
    for (Index r = 0; r < 8; ++r) {
      BigCount row_sum = 0;
      for (Index c = 0; c < 8; ++c) {
        CHECK(prod.at(r, c) <= 1);
        row_sum += prod.at(r, c);
      }
      CHECK(row_sum == 4);
    }
  }
  SUBCASE("sparse right operand agrees with the dense product") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      const auto a = to_counts(random_matrix(rng, 4, 5));
      const auto b = random_matrix(rng, 5, 3);
      CHECK(count_product(a, b) == count_product(a, to_counts(b)));
    }
  }
  SUBCASE("values beyond 64 bits are exact") {
    CountMatrix a(1, 1), b(1, 1);
    a.set(0, 0, BigCount(1) << 40);
    b.set(0, 0, BigCount(1) << 40);
    CHECK(count_product(a, b).at(0, 0) == BigCount(1) << 80);
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(count_product(CountMatrix(2, 3), CountMatrix(2, 3)), ShapeError);
    CHECK_THROWS_AS(count_product(CountMatrix(2, 3), SparseBinaryMatrix::ones(2, 2)),
                    ShapeError);
  }
}

TEST_CASE("to_counts") {
  CHECK(to_counts(SparseBinaryMatrix::identity(2)) == CountMatrix{{1, 0}, {0, 1}});
  CHECK(to_counts(SparseBinaryMatrix::ones(1, 1)) == CountMatrix{{1}});
  CHECK(to_counts(cyclic_shift(3, 1)) == CountMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

TEST_CASE("CountMatrix validation") {
  CHECK_THROWS_AS(CountMatrix(0, 1), ShapeError);
  CHECK_THROWS_AS(CountMatrix(2, 2, std::vector<BigCount>(3)), ShapeError);
  CHECK_THROWS_AS(CountMatrix(1, 1, std::vector<BigCount>{BigCount(-1)}), RangeError);
  CountMatrix m(1, 1);
  CHECK_THROWS_AS(m.set(0, 0, BigCount(-2)), RangeError);
  CHECK_THROWS_AS(m.at(1, 0), ShapeError);
}
