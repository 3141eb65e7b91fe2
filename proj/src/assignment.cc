// seldkit/assignment.cc

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seldkit/error.h"

namespace seld {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cost-equality slack for recognizing alternative optima during the
// lexicographic fixing pass. Costs met in practice are angular distances
// (<= 181), so an absolute epsilon is adequate.
constexpr double kTieEps = 1e-9;

void ValidateCosts(const std::vector<std::vector<double>> &cost) {
  size_t cols = cost.empty() ? 0 : cost[0].size();
  for (const auto &row : cost) {
    if (row.size() != cols) ThrowValidation("cost matrix rows differ in length");
    for (double c : row) {
      if (std::isnan(c)) ThrowValidation("cost matrix contains NaN");
      if (!std::isfinite(c)) ThrowValidation("cost matrix contains infinite cost");
    }
  }
}

// Shortest-augmenting-path assignment with potentials; requires m <= n.
// Returns match[row] = col for every row; total cost is the global minimum.
std::vector<int> SolveRectangular(const std::vector<std::vector<double>> &a,
                                  int m, int n) {
  // 1-based potentials formulation.
  std::vector<double> u(m + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= m; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(m, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] != 0) match[p[j] - 1] = j - 1;
  }
  return match;
}

// Optimal cost on a sub-matrix given by index lists (transposing when the
// row side is longer).
double SubproblemCost(const std::vector<std::vector<double>> &cost,
                      const std::vector<int> &rows,
                      const std::vector<int> &cols) {
  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(cols.size());
  if (m == 0 || n == 0) return 0.0;
  bool transpose = m > n;
  int rm = transpose ? n : m;
  int rn = transpose ? m : n;
  std::vector<std::vector<double>> a(rm, std::vector<double>(rn));
  for (int i = 0; i < rm; ++i) {
    for (int j = 0; j < rn; ++j) {
      a[i][j] = transpose ? cost[rows[j]][cols[i]] : cost[rows[i]][cols[j]];
    }
  }
  std::vector<int> match = SolveRectangular(a, rm, rn);
  double total = 0.0;
  for (int i = 0; i < rm; ++i) total += a[i][match[i]];
  return total;
}

}  // namespace

double OptimalAssignmentCost(const std::vector<std::vector<double>> &cost) {
  ValidateCosts(cost);
  std::vector<int> rows(cost.size());
  std::vector<int> cols(cost.empty() ? 0 : cost[0].size());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
  for (size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<int>(j);
  return SubproblemCost(cost, rows, cols);
}

std::vector<std::pair<int, int>> Hungarian(
    const std::vector<std::vector<double>> &cost) {
  ValidateCosts(cost);
  const int m = static_cast<int>(cost.size());
  const int n = m == 0 ? 0 : static_cast<int>(cost[0].size());
  const int k_pairs = std::min(m, n);
  std::vector<std::pair<int, int>> pairs;
  if (k_pairs == 0) return pairs;

  std::vector<int> all_rows(m), free_cols(n);
  for (int i = 0; i < m; ++i) all_rows[i] = i;
  for (int j = 0; j < n; ++j) free_cols[j] = j;
  const double optimum = SubproblemCost(cost, all_rows, free_cols);

  // Fix pairs in increasing row order: for each position, take the smallest
  // (row, col) whose reduced subproblem still reaches the optimal total.
  double fixed_cost = 0.0;
  int first_row = 0;
  while (static_cast<int>(pairs.size()) < k_pairs) {
    int needed = k_pairs - static_cast<int>(pairs.size());
    bool placed = false;
    for (int r = first_row; r <= m - needed && !placed; ++r) {
      for (size_t cj = 0; cj < free_cols.size() && !placed; ++cj) {
        int c = free_cols[cj];
        std::vector<int> rest_rows;
        for (int rr = r + 1; rr < m; ++rr) rest_rows.push_back(rr);
        std::vector<int> rest_cols;
        for (int cc : free_cols) {
          if (cc != c) rest_cols.push_back(cc);
        }
        double sub = SubproblemCost(cost, rest_rows, rest_cols);
        if (fixed_cost + cost[r][c] + sub <= optimum + kTieEps) {
          pairs.emplace_back(r, c);
          fixed_cost += cost[r][c];
          first_row = r + 1;
          free_cols.erase(free_cols.begin() + static_cast<long>(cj));
          placed = true;
        }
      }
    }
    if (!placed) {
      // Numerically unreachable: the optimum was computed on this matrix.
      throw SeldError(ErrorKind::kInternal,
                      "assignment fixing failed to reach the optimum");
    }
  }
  return pairs;
}

}  // namespace seld
