#include <doctest.h>

#include "magflow/exact.hpp"

#include <random>

using namespace magflow;

namespace {

RatMat from_rows(const std::vector<RatVec>& rows) {
  RatMat m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref of a hand-worked 3x4 system") {
  // x + 2y + z = 0 rows; row-reduces to two pivots and one free column.
  RatMat m = from_rows({{1, 2, 1, 1}, {2, 4, 0, 6}, {3, 6, 1, 7}});
  std::vector<std::size_t> pivots;
  RatMat r = rref(m, &pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  RatMat expected = from_rows({{1, 2, 0, 3}, {0, 0, 1, -2}, {0, 0, 0, 0}});
  CHECK(r == expected);
  CHECK(rank(m) == 2);
}

TEST_CASE("null_space is canonical: unit in each free slot") {
  RatMat m = from_rows({{1, 2, 0, 3}, {0, 0, 1, -2}});
  auto ns = null_space(m);
  REQUIRE(ns.size() == 2);
  // free columns 1 and 3, in that order
  CHECK(ns[0] == RatVec{-2, 1, 0, 0});
  CHECK(ns[1] == RatVec{-3, 0, 2, 1});
  for (const auto& v : ns) CHECK(is_zero(mat_vec(m, v)));
}

TEST_CASE("inverse: exact 2x2 and singularity detection") {
  RatMat m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 3; m.at(1, 1) = 4;
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Rational(-2));
  CHECK(inv->at(0, 1) == Rational(1));
  CHECK(inv->at(1, 0) == Rational(3, 2));
  CHECK(inv->at(1, 1) == Rational(-1, 2));

  RatMat s(2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2;
  s.at(1, 0) = 2; s.at(1, 1) = 4;
  CHECK(!inverse(s).has_value());
}

TEST_CASE("reduce_against detects span membership") {
  auto basis = row_space_basis(from_rows({{1, 0, 2}, {0, 1, -1}}));
  CHECK(is_zero(reduce_against(basis, {3, -2, 8})));   // 3 r1 - 2 r2
  CHECK(!is_zero(reduce_against(basis, {0, 0, 1})));
}

TEST_CASE("randomized structure checks") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 2 + trial % 4, c = 2 + (trial / 2) % 5;
    RatMat m = random_matrix(rng, r, c);

    // rank-nullity, and the null space really annihilates
    auto ns = null_space(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& v : ns) CHECK(is_zero(mat_vec(m, v)));

    // rref is idempotent
    RatMat r1 = rref(m);
    CHECK(rref(r1) == r1);

    // every original row lies in the span of the canonical row basis
    auto b1 = row_space_basis(m);
    for (std::size_t i = 0; i < r; ++i) {
      RatVec row(c);
      for (std::size_t j = 0; j < c; ++j) row[j] = m.at(i, j);
      CHECK(is_zero(reduce_against(b1, row)));
    }
  }
}

TEST_CASE("randomized inverse round trips") {
  std::mt19937_64 rng(11);
  int invertible = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 4;
    RatMat m = random_matrix(rng, n, n);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < n);
      continue;
    }
    ++invertible;
    RatMat prod(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += m.at(i, k) * inv->at(k, j);
        prod.at(i, j) = s;
      }
    CHECK(prod == RatMat::identity(n));
  }
  CHECK(invertible > 10);  // the sample is not degenerate
}
