// tests/support/oracles.h

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

// Brute-force reference implementations used to pin expected values. These
// deliberately avoid the library's FFT / assignment code paths.

#ifndef SELDKIT_TESTS_SUPPORT_ORACLES_H_
#define SELDKIT_TESTS_SUPPORT_ORACLES_H_

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace seld::testing {

// O(n^2) DFT, the independent oracle for every FFT-backed path.
inline std::vector<std::complex<double>> DirectDft(
    const std::vector<double> &x) {
  const size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (size_t t = 0; t < n; ++t) {
      double angle = -2.0 * M_PI * static_cast<double>(k * t) / n;
      acc += x[t] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

// O(n*m) time-domain convolution.
inline std::vector<double> DirectConvolve(const std::vector<double> &x,
                                          const std::vector<double> &h) {
  if (x.empty() || h.empty()) return {};
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < h.size(); ++j) {
      y[i + j] += x[i] * h[j];
    }
  }
  return y;
}

// Lag of the peak of the time-domain cross-correlation
// r[lag] = sum_t a[t] * b[t + lag], searched over [-max_lag, max_lag).
inline int DirectCrossCorrelationPeak(const std::vector<double> &a,
                                      const std::vector<double> &b,
                                      int max_lag) {
  double best = -std::numeric_limits<double>::infinity();
  int best_lag = 0;
  for (int lag = -max_lag; lag < max_lag; ++lag) {
    double acc = 0.0;
    for (size_t t = 0; t < a.size(); ++t) {
      long u = static_cast<long>(t) + lag;
      if (u >= 0 && u < static_cast<long>(b.size())) {
        acc += a[t] * b[static_cast<size_t>(u)];
      }
    }
    if (acc > best) {
      best = acc;
      best_lag = lag;
    }
  }
  return best_lag;
}

struct BruteForceAssignmentResult {
  double cost = 0.0;
  std::vector<std::pair<int, int>> pairs;  // lexicographically smallest optimum
};

// Enumerates every maximal partial assignment of an m x n matrix (min(m, n)
// pairs) and keeps the cheapest; ties resolve to the lexicographically
// smallest flattened pair sequence. Exponential, fine for the <= 4 x 4
// matrices it is used on.
inline BruteForceAssignmentResult BruteForceAssignment(
    const std::vector<std::vector<double>> &cost) {
  const int m = static_cast<int>(cost.size());
  const int n = m == 0 ? 0 : static_cast<int>(cost[0].size());
  const int k_pairs = std::min(m, n);

  BruteForceAssignmentResult best;
  best.cost = std::numeric_limits<double>::infinity();
  if (k_pairs == 0) {
    best.cost = 0.0;
    return best;
  }

  std::vector<char> col_used(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> current;

  auto lex_less = [](const std::vector<std::pair<int, int>> &a,
                     const std::vector<std::pair<int, int>> &b) {
    return a < b;  // pair-wise lexicographic, rows already ascending
  };

  // Recurse over rows; each row either takes an unused column or is skipped
  // when enough rows remain to finish.
  auto recurse = [&](auto &&self, int row, int chosen, double acc) -> void {
    if (chosen == k_pairs) {
      if (acc < best.cost - 1e-12 ||
          (std::abs(acc - best.cost) <= 1e-12 && lex_less(current, best.pairs))) {
        best.cost = acc;
        best.pairs = current;
      }
      return;
    }
    if (row >= m) return;
    if (m - row > k_pairs - chosen) {
      self(self, row + 1, chosen, acc);  // skip this row
    }
    for (int c = 0; c < n; ++c) {
      if (col_used[static_cast<size_t>(c)]) continue;
      col_used[static_cast<size_t>(c)] = 1;
      current.emplace_back(row, c);
      self(self, row + 1, chosen + 1, acc + cost[row][c]);
      current.pop_back();
      col_used[static_cast<size_t>(c)] = 0;
    }
  };
  recurse(recurse, 0, 0, 0.0);
  return best;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    static std::atomic<uint64_t> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("seldkit_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace seld::testing

#endif  // SELDKIT_TESTS_SUPPORT_ORACLES_H_
