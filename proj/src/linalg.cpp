// Copyright 2026 The corrpoly Authors
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

#include "linalg.hpp"

#include <utility>

namespace corrpoly::linalg {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t found = row;
    while (found < m.size() && m[found][col].is_zero()) ++found;
    if (found == m.size()) continue;
    std::swap(m[row], m[found]);
    const Rational p = m[row][col];
    for (auto& v : m[row]) v /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::optional<Vector> kernel_line(Matrix m) {
  if (m.empty()) return std::nullopt;
  const std::size_t cols = m.front().size();
  auto pivots = row_reduce(m);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;
  Vector x(cols);
  x[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
  return x;
}

}  // namespace corrpoly::linalg
