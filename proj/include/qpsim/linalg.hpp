// Copyright 2026 The qpsim Authors
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

#pragma once

#include <cstdint>
#include <vector>

#include "qpsim/rational.hpp"

namespace qpsim {

/// Exact rank over the rationals of an integer matrix, by fraction-free
/// (Bareiss) elimination.
inline size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t rank = 0, r = 0;
  BigInt prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

/// Same, for small int64 matrices (entries stay bounded at the sizes used).
inline int exact_rank_i64(int64_t m[], int rows, int cols) {
  int rank = 0, r = 0;
  int64_t prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i * cols + c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i * cols + j] = (m[i * cols + j] * m[r * cols + c] - m[i * cols + c] * m[r * cols + j]) / prev;
      m[i * cols + c] = 0;
    }
    prev = m[r * cols + c];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace qpsim
