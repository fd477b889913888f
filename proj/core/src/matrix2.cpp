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

#include "hiddenalg/matrix2.hpp"

namespace hiddenalg {

Matrix2 Matrix2::identity() {
  Matrix2 r;
  r.m[0][0] = Scalar(1);
  r.m[1][1] = Scalar(1);
  return r;
}

Matrix2 Matrix2::pauli(int k) {
  Matrix2 r;
  switch (k) {
    case 0:
      return identity();
    case 1:
      r.m[0][1] = Scalar(1);
      r.m[1][0] = Scalar(1);
      return r;
    case 2:
      r.m[0][1] = -Scalar::i();
      r.m[1][0] = Scalar::i();
      return r;
    case 3:
      r.m[0][0] = Scalar(1);
      r.m[1][1] = Scalar(-1);
      return r;
    default:
      throw UsageError("Matrix2::pauli: index must be 0..3");
  }
}

Matrix2& Matrix2::operator+=(const Matrix2& o) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m[r][c] += o.m[r][c];
  return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m[r][c] -= o.m[r][c];
  return *this;
}

Matrix2 operator*(const Scalar& s, Matrix2 a) {
  for (auto& row : a.m)
    for (auto& v : row) v *= s;
  return a;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

Matrix2 Matrix2::transpose() const {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = m[j][i];
  return r;
}

Matrix2 Matrix2::inverse() const {
  const Scalar det = determinant();
  if (det.is_zero()) throw UsageError("Matrix2::inverse: singular matrix");
  Matrix2 r;
  r.m[0][0] = m[1][1] / det;
  r.m[0][1] = -m[0][1] / det;
  r.m[1][0] = -m[1][0] / det;
  r.m[1][1] = m[0][0] / det;
  return r;
}

bool Matrix2::is_zero() const {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

std::string Matrix2::to_string() const {
  return "((" + m[0][0].to_string() + ", " + m[0][1].to_string() + "), (" + m[1][0].to_string() +
         ", " + m[1][1].to_string() + "))";
}

}  // namespace hiddenalg
