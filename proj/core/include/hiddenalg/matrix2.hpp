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

#include <array>
#include <string>

#include "hiddenalg/scalar.hpp"

namespace hiddenalg {

/// Exact 2x2 matrix over Q(i); m[row][col].
struct Matrix2 {
  std::array<std::array<Scalar, 2>, 2> m{};

  static Matrix2 identity();
  static Matrix2 zero() { return {}; }
  /// Pauli matrix sigma^k for k = 1, 2, 3; k = 0 gives the identity.
  static Matrix2 pauli(int k);

  Scalar& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  Matrix2& operator+=(const Matrix2& o);
  Matrix2& operator-=(const Matrix2& o);
  friend Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
  friend Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
  friend Matrix2 operator*(const Scalar& s, Matrix2 a);
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  Matrix2 transpose() const;
  Scalar trace() const { return m[0][0] + m[1][1]; }
  Scalar determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  /// Throws UsageError for a singular matrix.
  Matrix2 inverse() const;
  bool is_zero() const;
  /// "((a, b), (c, d))"
  std::string to_string() const;
};

}  // namespace hiddenalg
