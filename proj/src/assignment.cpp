// Copyright 2026 The diarpost Authors
//
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

#include "diarpost/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace diarpost {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t max_entry(const CostMatrix& m) {
  std::int64_t best = 0;
  for (const auto& row : m) {
    for (std::int64_t v : row) best = std::max(best, v);
  }
  return best;
}

// Agreement counts become a minimization problem by flipping against the
// largest entry; the assignment is unchanged.
CostMatrix negate_against_max(const CostMatrix& counts) {
  std::int64_t top = max_entry(counts);
  CostMatrix cost(counts.size(), std::vector<std::int64_t>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts.size(); ++j) {
      cost[i][j] = top - counts[i][j];
    }
  }
  return cost;
}

std::int64_t min_cost_value(const CostMatrix& cost) {
  std::int64_t total = 0;
  std::vector<int> rowsol = min_cost_assignment(cost);
  for (std::size_t i = 0; i < rowsol.size(); ++i) total += cost[i][rowsol[i]];
  return total;
}

}  // namespace

std::vector<int> min_cost_assignment(const CostMatrix& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("min_cost_assignment: matrix is not square");
    }
  }

  // Shortest-augmenting-path formulation with row/column potentials,
  // 1-based scratch arrays.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
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

  std::vector<int> rowsol(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] != 0) rowsol[p[j] - 1] = j - 1;
  }
  return rowsol;
}

std::int64_t max_agreement_value(const CostMatrix& counts) {
  const std::int64_t n = static_cast<std::int64_t>(counts.size());
  if (n == 0) return 0;
  return n * max_entry(counts) - min_cost_value(negate_against_max(counts));
}

std::vector<int> max_agreement_assignment(const CostMatrix& counts) {
  const int n = static_cast<int>(counts.size());
  if (n == 0) return {};

  // Fix rows in order, always trying the smallest column first and keeping
  // it iff the remainder can still reach the optimum. This pins ties to the
  // lexicographically smallest assignment (identity when all entries tie).
  std::int64_t remaining_target = max_agreement_value(counts);
  std::vector<int> result(n, -1);
  std::vector<char> used(n, 0);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      // Submatrix over rows > i and unused columns != j.
      std::vector<int> cols;
      cols.reserve(n - i - 1);
      for (int c = 0; c < n; ++c) {
        if (!used[c] && c != j) cols.push_back(c);
      }
      CostMatrix sub(n - i - 1, std::vector<std::int64_t>(n - i - 1));
      for (int r = i + 1; r < n; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          sub[r - i - 1][c] = counts[r][cols[c]];
        }
      }
      if (counts[i][j] + max_agreement_value(sub) == remaining_target) {
        result[i] = j;
        used[j] = 1;
        remaining_target -= counts[i][j];
        break;
      }
    }
  }
  return result;
}

}  // namespace diarpost
