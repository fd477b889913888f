/*
 * Copyright 2026 The hiddenalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hiddenalg/scalar.hpp"

namespace hiddenalg {

/// Solves A x = b exactly by Gauss-Jordan elimination over Q(i).
///
/// `rows` is row-major with `cols` unknowns. Returns one solution (free
/// variables set to zero) or nullopt when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> rows,
                                                       std::vector<Scalar> rhs, std::size_t cols) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Scalar inv = Scalar(1) / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Scalar f = rows[q][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
      rhs[q] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < m; ++q) {
    if (!rhs[q].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols);
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = rhs[q];
  return x;
}

}  // namespace hiddenalg
