// tests/unit/assignment_test.cc

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seldkit/assignment.h"

#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "../support/oracles.h"
#include "seldkit/error.h"

using seld::Hungarian;
using seld::OptimalAssignmentCost;
using seld::testing::BruteForceAssignment;

namespace {

double PairsCost(const std::vector<std::vector<double>> &cost,
                 const std::vector<std::pair<int, int>> &pairs) {
  double total = 0.0;
  for (const auto &[r, c] : pairs) total += cost[r][c];
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("assignment");

TEST_CASE("diagonal-dominant 2x2") {
  std::vector<std::vector<double>> cost = {{1, 2}, {2, 1}};
  auto pairs = Hungarian(cost);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<int, int>{0, 0});
  CHECK(pairs[1] == std::pair<int, int>{1, 1});
  CHECK(OptimalAssignmentCost(cost) == doctest::Approx(2.0));
}

TEST_CASE("anti-diagonal 2x2") {
  std::vector<std::vector<double>> cost = {{2, 1}, {1, 2}};
  auto pairs = Hungarian(cost);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<int, int>{0, 1});
  CHECK(pairs[1] == std::pair<int, int>{1, 0});
  CHECK(OptimalAssignmentCost(cost) == doctest::Approx(2.0));
}

TEST_CASE("empty and degenerate shapes") {
  CHECK(Hungarian({}).empty());
  CHECK(OptimalAssignmentCost({}) == 0.0);
  CHECK(Hungarian({{}, {}}).empty());  // 2 x 0
  std::vector<std::vector<double>> one_by_three = {{3.0, 1.0, 2.0}};
  auto pairs = Hungarian(one_by_three);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("ties resolve to the lexicographically smallest assignment") {
  std::vector<std::vector<double>> zeros3 = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  auto pairs = Hungarian(zeros3);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<int, int>{0, 0});
  CHECK(pairs[1] == std::pair<int, int>{1, 1});
  CHECK(pairs[2] == std::pair<int, int>{2, 2});

  std::vector<std::vector<double>> flat23 = {{5, 5, 5}, {5, 5, 5}};
  auto p23 = Hungarian(flat23);
  REQUIRE(p23.size() == 2);
  CHECK(p23[0] == std::pair<int, int>{0, 0});
  CHECK(p23[1] == std::pair<int, int>{1, 1});

  // 3 rows, 2 columns: row 2 can only help if rows come out sorted; the
  // cheapest pair set must still prefer the smallest flattened sequence.
  std::vector<std::vector<double>> flat32 = {{1, 1}, {1, 1}, {1, 1}};
  auto p32 = Hungarian(flat32);
  REQUIRE(p32.size() == 2);
  CHECK(p32[0] == std::pair<int, int>{0, 0});
  CHECK(p32[1] == std::pair<int, int>{1, 1});
}

TEST_CASE("NaN and infinite costs are rejected") {
  CHECK_THROWS_AS(
      Hungarian({{0.0, std::numeric_limits<double>::quiet_NaN()}, {0.0, 0.0}}),
      seld::SeldError);
  CHECK_THROWS_AS(
      Hungarian({{0.0, std::numeric_limits<double>::infinity()}, {0.0, 0.0}}),
      seld::SeldError);
  try {
    Hungarian({{std::numeric_limits<double>::quiet_NaN()}});
  } catch (const seld::SeldError &e) {
    CHECK(e.kind() == seld::ErrorKind::kValidation);
  }
}

TEST_CASE("matches brute force on 1000 random matrices up to 4x4") {
  std::mt19937 rng(2022);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int it = 0; it < 1000; ++it) {
    int m = dim(rng), n = dim(rng);
    std::vector<std::vector<double>> cost(m, std::vector<double>(n));
    for (auto &row : cost) {
      for (double &x : row) x = value(rng);
    }
    auto expect = BruteForceAssignment(cost);
    auto pairs = Hungarian(cost);
    REQUIRE(pairs.size() == expect.pairs.size());
    CHECK(std::abs(PairsCost(cost, pairs) - expect.cost) < 1e-9);
    CHECK(std::abs(OptimalAssignmentCost(cost) - expect.cost) < 1e-9);
    CHECK(pairs == expect.pairs);  // lexicographic tie-break agrees
  }
}

TEST_CASE("rectangular matrices assign min(m, n) pairs optimally") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  for (int it = 0; it < 200; ++it) {
    int m = 1 + static_cast<int>(rng() % 5);
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<double>> cost(m, std::vector<double>(n));
    for (auto &row : cost) {
      for (double &x : row) x = value(rng);
    }
    auto pairs = Hungarian(cost);
    CHECK(static_cast<int>(pairs.size()) == std::min(m, n));
    std::vector<char> row_used(m, 0), col_used(n, 0);
    for (const auto &[r, c] : pairs) {
      CHECK(!row_used[r]);
      CHECK(!col_used[c]);
      row_used[r] = col_used[c] = 1;
    }
    if (m <= 4 && n <= 4) {
      CHECK(std::abs(PairsCost(cost, pairs) - BruteForceAssignment(cost).cost) <
            1e-9);
    }
  }
}

TEST_SUITE_END();
